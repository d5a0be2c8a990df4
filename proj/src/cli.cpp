#include "lgmf/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgmf/ansatz.hpp"
#include "lgmf/cft.hpp"
#include "lgmf/complex.hpp"
#include "lgmf/decompose.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/mf_io.hpp"
#include "lgmf/parallel.hpp"
#include "lgmf/potential.hpp"
#include "lgmf/qdim.hpp"
#include "lgmf/reduce.hpp"
#include "lgmf/search.hpp"

namespace lgmf {

namespace {

PermLabel parse_label(int d, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("label must be m:l, got '" + text + "'");
  try {
    return make_label(d, std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("label must be m:l, got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw DomainError("label out of range: '" + text + "'");
  }
}

std::vector<Rational> parse_ladder(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
  if (!out) throw DomainError("write failed for '" + path + "'");
}

std::string rational_text(const Rational& r) { return r.to_string(); }

struct Options {
  std::string format = "tsv";
  int jobs = 0;
  std::uint64_t seed = 1;
  std::string potential, v, w;
  int d = 5;
  std::string a, b, label, J;
  std::string in, in_b, out_path, system;
  std::string rule = "printed";
  double cutoff = 4;
  int rank = 2;
  std::string ladder;
  int attempts = 16;
  double tol = 1e-10;
  double budget = 60;
  bool no_gauge = false;
  bool no_snap = false;
};

MatrixFactorization mf_from(const Options& o, const std::string& file, const std::string& label) {
  if (!file.empty()) return read_mf(read_file(file));
  if (!label.empty()) return make_permutation_mf(parse_label(o.d, label));
  throw DomainError("need a factorization file or a label");
}

Rational cutoff_of(double c) {
  // accept decimal input but keep it exact when it is an integer or half-integer
  if (c <= 0) throw DomainError("cutoff must be positive");
  long long scaled = std::llround(c * 1000);
  return Rational(scaled, 1000);
}

void emit_decomposition_json(std::ostream& out, const Decomposition& dec) {
  nlohmann::json j;
  j["d"] = dec.d;
  j["decomposition"] = dec.to_string();
  auto& arr = j["summands"] = nlohmann::json::array();
  for (const auto& [lab, k] : dec.mult) arr.push_back({{"m", lab.m}, {"l", lab.l}, {"mult", k}});
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau-Ginzburg matrix factorization toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "worker threads (default: LGMF_JOBS or 1)")->check(CLI::NonNegativeNumber);
  std::function<void()> action;

  auto fmt = [&](CLI::App* c) { c->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"})); };
  auto need_potential = [&](CLI::App* c) {
    c->add_option("--potential", o.potential, "polynomial text or catalog name (A:n, D:n, E:6, E:7, E:8)")->required();
  };

  auto* jac = app.add_subcommand("jacobian", "partial derivatives and Milnor ring basis");
  need_potential(jac);
  fmt(jac);
  jac->callback([&] {
    action = [&] {
      auto w = potential_from_text(o.potential);
      auto parts = jacobian(w);
      auto qb = quotient_basis(jacobian_basis(w));
      if (o.format == "json") {
        nlohmann::json j;
        j["potential"] = w.poly.to_string();
        for (std::size_t i = 0; i < parts.size(); ++i) j["partials"][w.ring()->names[i]] = parts[i].to_string();
        j["finite"] = qb.finite;
        if (qb.finite) {
          j["basis"] = nlohmann::json::array();
          for (const auto& m : qb.monomials) j["basis"].push_back(MultiPoly::monomial(w.ring(), m, CycloNumber(1, 1)).to_string());
        }
        out << j.dump(2) << "\n";
        return;
      }
      for (std::size_t i = 0; i < parts.size(); ++i) out << "d" << w.ring()->names[i] << "\t" << parts[i].to_string() << "\n";
      if (!qb.finite) {
        out << "basis\tinfinite\n";
        return;
      }
      out << "basis";
      for (const auto& m : qb.monomials) out << "\t" << MultiPoly::monomial(w.ring(), m, CycloNumber(1, 1)).to_string();
      out << "\n";
    };
  });

  auto* mil = app.add_subcommand("milnor", "Milnor number");
  need_potential(mil);
  mil->callback([&] { action = [&] { out << milnor_number(potential_from_text(o.potential)) << "\n"; }; });

  auto* cc = app.add_subcommand("cc", "central charge sum 3(1 - 2q)");
  need_potential(cc);
  cc->callback([&] {
    action = [&] {
      auto w = potential_from_text(o.potential);
      milnor_number(w);
      out << rational_text(central_charge(w)) << "\n";
    };
  });

  auto* mk = app.add_subcommand("mf-make", "permutation-type factorization of x^d - y^d");
  mk->add_option("--d", o.d, "d")->required();
  mk->add_option("--label", o.label, "m:l");
  mk->add_option("--J", o.J, "comma-separated subset of Z_d");
  mk->add_option("--out", o.out_path, "write here instead of stdout");
  mk->callback([&] {
    action = [&] {
      MatrixFactorization m;
      if (!o.label.empty() && o.J.empty()) {
        m = make_permutation_mf(parse_label(o.d, o.label));
      } else if (!o.J.empty() && o.label.empty()) {
        std::vector<int> J;
        std::stringstream ss(o.J);
        std::string item;
        while (std::getline(ss, item, ',')) J.push_back(std::stoi(item));
        m = make_permutation_mf(o.d, J);
      } else {
        throw CLI::ValidationError("mf-make", "give exactly one of --label and --J");
      }
      if (o.out_path.empty()) out << write_mf(m);
      else write_file(o.out_path, write_mf(m));
    };
  });

  auto* val = app.add_subcommand("mf-validate", "check shape, parity, homogeneity and d^2 = W");
  val->add_option("--in", o.in, "factorization file")->required();
  fmt(val);
  val->callback([&] {
    action = [&] {
      auto r = validate(read_mf(read_file(o.in)));
      if (o.format == "json") {
        nlohmann::json j{{"ok", r.ok}, {"kind", r.kind}, {"row", r.row}, {"col", r.col}, {"message", r.message}};
        out << j.dump(2) << "\n";
      } else if (r.ok) {
        out << "ok\n";
      } else {
        out << "invalid\t" << r.kind << "\t" << r.row << "\t" << r.col << "\t" << r.message << "\n";
      }
      if (!r.ok) throw DomainError("invalid factorization: " + r.message);
    };
  });

  auto* fu = app.add_subcommand("fuse", "reduce and decompose P_a (x) P_b");
  fu->add_option("--d", o.d, "d")->required();
  fu->add_option("--a", o.a, "m:l")->required();
  fu->add_option("--b", o.b, "m:l")->required();
  fu->add_option("--out", o.out_path, "also write the reduced factorization");
  fmt(fu);
  fu->callback([&] {
    action = [&] {
      auto a = parse_label(o.d, o.a), b = parse_label(o.d, o.b);
      auto dec = fuse_decompose(a, b);
      if (!o.out_path.empty()) write_file(o.out_path, write_mf(fuse_mf(a, b)));
      if (o.format == "json") emit_decomposition_json(out, dec);
      else out << dec.to_string() << "\n";
    };
  });

  auto* ft = app.add_subcommand("fusion-table", "all pairs of simples at d against a closed-form rule");
  ft->add_option("--d", o.d, "d")->required();
  ft->add_option("--rule", o.rule, "printed (m+m'-(l+l'-k)/2) or bottom (m+m'+(l+l'-k)/2)")
      ->check(CLI::IsMember({"printed", "bottom"}));
  fmt(ft);
  ft->callback([&] {
    action = [&] {
      auto rows = fusion_table(o.d, o.rule == "printed" ? fusion_rule : fusion_rule_bottom_anchored);
      out << (o.format == "json" ? fusion_table_json(rows) : fusion_table_tsv(rows));
    };
  });

  auto* hd = app.add_subcommand("homdim", "graded Hom dimensions in the homotopy category");
  hd->add_option("--d", o.d, "d for labels");
  hd->add_option("--a", o.a, "source label m:l");
  hd->add_option("--b", o.b, "target label m:l");
  hd->add_option("--in", o.in, "source factorization file");
  hd->add_option("--in-b", o.in_b, "target factorization file");
  hd->add_option("--cutoff", o.cutoff, "weighted-degree cutoff");
  fmt(hd);
  hd->callback([&] {
    action = [&] {
      auto m = mf_from(o, o.in, o.a);
      auto n = mf_from(o, o.in_b, o.b);
      auto h = hom_dims(m, n, cutoff_of(o.cutoff));
      if (o.format == "json") {
        nlohmann::json j{{"even", h.even}, {"odd", h.odd}, {"stabilized", h.stabilized}, {"cutoff", h.cutoff.to_string()}};
        j["by_degree"] = nlohmann::json::array();
        for (const auto& [q, p] : h.by_degree) j["by_degree"].push_back({{"degree", q.to_string()}, {"even", p.first}, {"odd", p.second}});
        out << j.dump(2) << "\n";
        return;
      }
      out << "even\t" << h.even << "\nodd\t" << h.odd << "\nstabilized\t" << (h.stabilized ? "yes" : "no") << "\n";
      for (const auto& [q, p] : h.by_degree) out << "degree\t" << q << "\t" << p.first << "\t" << p.second << "\n";
    };
  });

  auto* qd = app.add_subcommand("qdim", "left and right quantum dimensions");
  qd->add_option("--in", o.in, "factorization file");
  qd->add_option("--d", o.d, "d for --label");
  qd->add_option("--label", o.label, "m:l");
  fmt(qd);
  qd->callback([&] {
    action = [&] {
      auto q = qdim(mf_from(o, o.in, o.label));
      if (o.format == "json") {
        nlohmann::json j{{"left", q.left.to_string()},
                         {"right", q.right.to_string()},
                         {"left_abs", std::abs(q.left.embed())},
                         {"right_abs", std::abs(q.right.embed())},
                         {"both_nonzero", q.both_nonzero}};
        out << j.dump(2) << "\n";
        return;
      }
      std::ostringstream os;
      os.precision(15);
      os << "left\t" << q.left.to_string() << "\t" << std::abs(q.left.embed()) << "\n";
      os << "right\t" << q.right.to_string() << "\t" << std::abs(q.right.embed()) << "\n";
      os << "both_nonzero\t" << (q.both_nonzero ? "yes" : "no") << "\n";
      out << os.str();
    };
  });

  auto* vo = app.add_subcommand("verify-orbifold", "validate and check both quantum dimensions are nonzero");
  vo->add_option("--in", o.in, "factorization file")->required();
  vo->add_option("--v", o.v, "left potential")->required();
  vo->add_option("--w", o.w, "right potential")->required();
  fmt(vo);
  vo->callback([&] {
    action = [&] {
      auto r = verify_orbifold(read_mf(read_file(o.in)), potential_from_text(o.v), potential_from_text(o.w));
      if (o.format == "json") {
        out << orbifold_report_json(r);
      } else {
        out << "valid\t" << (r.valid ? "yes" : "no") << "\nwitness\t" << (r.witness ? "yes" : "no") << "\nqdim_left\t"
            << r.qdims.left.to_string() << "\nqdim_right\t" << r.qdims.right.to_string() << "\nmessage\t" << r.message
            << "\n";
      }
    };
  });

  auto add_ansatz_opts = [&](CLI::App* c, bool required) {
    auto* v = c->add_option("--v", o.v, "left potential");
    auto* w = c->add_option("--w", o.w, "right potential");
    auto* l = c->add_option("--ladder", o.ladder, "generator degrees, comma separated");
    if (required) {
      v->required();
      w->required();
      l->required();
    }
    c->add_option("--rank", o.rank, "even rank");
    c->add_flag("--no-gauge", o.no_gauge, "keep the rescaling freedom");
  };
  auto build_ansatz = [&] {
    return make_ansatz(potential_from_text(o.v), potential_from_text(o.w), o.rank, parse_ladder(o.ladder), !o.no_gauge);
  };

  auto* an = app.add_subcommand("ansatz", "matrix factorization ansatz with unknown coefficients");
  add_ansatz_opts(an, true);
  an->add_option("--out", o.out_path, "write the system file here");
  an->callback([&] {
    action = [&] {
      auto s = build_ansatz();
      if (!o.out_path.empty()) {
        write_file(o.out_path, export_system(s));
        out << "unknowns\t" << s.unknown_count() << "\nequations\t" << s.equation_count() << "\n";
      } else {
        out << export_system(s);
      }
    };
  });

  auto* se = app.add_subcommand("search", "randomized Newton search on an ansatz system");
  add_ansatz_opts(se, false);
  se->add_option("--system", o.system, "system file (instead of --v/--w/--ladder)");
  se->add_option("--attempts", o.attempts, "random starts");
  se->add_option("--tol", o.tol, "residual tolerance");
  se->add_option("--seed", o.seed, "random seed");
  se->add_option("--budget", o.budget, "wall-clock budget in seconds");
  se->add_flag("--no-snap", o.no_snap, "skip pinning unknowns before exact reconstruction");
  se->callback([&] {
    action = [&] {
      AnsatzSystem s;
      if (!o.system.empty()) s = import_system(read_file(o.system));
      else if (!o.v.empty() && !o.w.empty() && !o.ladder.empty()) s = build_ansatz();
      else throw CLI::ValidationError("search", "give --system or --v, --w and --ladder");
      SearchOptions so;
      so.attempts = o.attempts;
      so.tol = o.tol;
      so.seed = o.seed;
      so.budget_seconds = o.budget;
      so.snap = !o.no_snap;
      so.jobs = o.jobs;
      out << search_result_json(s, search(s, so));
    };
  });

  auto* vc = app.add_subcommand("verify-correspondence", "CFT fusion vs factorization fusion on s=0 NS labels");
  vc->add_option("--d", o.d, "d")->required();
  fmt(vc);
  vc->callback([&] {
    action = [&] {
      auto r = verify_correspondence(o.d);
      out << (o.format == "json" ? correspondence_json(r) : correspondence_tsv(r));
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
    if (o.jobs > 0) set_default_jobs(o.jobs);
    action();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    nlohmann::json j{{"error", "usage"}, {"message", e.what()}};
    err << j.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    const char* kind = dynamic_cast<const CutoffError*>(&e)    ? "cutoff"
                       : dynamic_cast<const ParseError*>(&e)   ? "parse"
                       : dynamic_cast<const RingMismatch*>(&e) ? "ring"
                       : dynamic_cast<const DomainError*>(&e)  ? "domain"
                                                               : "runtime";
    nlohmann::json j{{"error", kind}, {"message", e.what()}};
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace lgmf
