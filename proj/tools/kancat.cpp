#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "kancat/completion.hpp"
#include "kancat/io.hpp"
#include "kancat/kan.hpp"
#include "kancat/mixed.hpp"
#include "kancat/nf_enum.hpp"

using json = nlohmann::ordered_json;
using namespace kancat;

namespace {

  constexpr int exit_ok         = 0;
  constexpr int exit_undecided  = 1;
  constexpr int exit_input      = 2;
  constexpr char const* version = "0.1.0";

  struct Common {
    std::string file;
    std::string format = "text";
    bool json() const {
      return format == "json";
    }
  };

  struct Input {
    std::string  text;
    std::string  sha256;
    Presentation presentation;
  };

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) {
      out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    }
    return out.str();
  }

  // Signals an input problem already reported by the caller.
  struct InputError {
    std::string message;
  };

  Input load(std::string const& file) {
    Input in;
    if (file == "-") {
      in.text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(file, std::ios::binary);
      if (!f) {
        throw InputError{"cannot open '" + file + "'"};
      }
      in.text.assign(std::istreambuf_iterator<char>(f), {});
    }
    in.sha256       = sha256_hex(in.text);
    in.presentation = parse_presentation(in.text);
    return in;
  }

  void emit(Common const& c, json const& j, std::string const& text) {
    if (c.json()) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  template <typename Poly>
  json poly_list(std::vector<Poly> const& ps) {
    json out = json::array();
    for (auto const& p : ps) {
      out.push_back(to_string(p));
    }
    return out;
  }

  std::string rule_string(MixedRule const& r) {
    return std::visit([](auto const& x) { return to_string(x.poly()); }, r);
  }

  std::string rule_string(Rule const& r) {
    return to_string(r.poly());
  }

  std::vector<PathPolynomial> polys(RewriteSystem const& sys) {
    std::vector<PathPolynomial> out;
    for (auto const& r : sys.rules()) {
      out.push_back(r.poly());
    }
    return out;
  }

  std::vector<TaggedPolynomial> polys(MixedSystem const& sys) {
    std::vector<TaggedPolynomial> out;
    for (auto const& r : sys.eps_rules()) {
      out.push_back(r.poly());
    }
    return out;
  }

  RewriteSystem const& untagged(RewriteSystem const& s) {
    return s;
  }
  RewriteSystem const& untagged(MixedSystem const& s) {
    return s.e_rules();
  }

  template <typename Report>
  json report_json(Report const& r) {
    json j;
    j["status"] = r.is_complete() ? "complete" : "incomplete";
    if (!r.is_complete()) {
      j["reason"] = r.reason;
    }
    j["passes"]          = r.passes;
    j["spolys_examined"] = r.spolys_examined;
    json added           = json::array();
    for (auto const& a : r.added) {
      added.push_back(rule_string(a));
    }
    j["added"] = added;
    j["rules"] = poly_list(polys(untagged(r.system)));
    if constexpr (std::is_same_v<Report, MixedCompletionReport>) {
      j["tagged_rules"] = poly_list(polys(r.system));
    }
    return j;
  }

  template <typename Report>
  std::string report_text(Report const& r) {
    std::ostringstream out;
    if (r.is_complete()) {
      out << "status: complete\n";
    } else {
      out << "status: incomplete (" << r.reason << ")\n";
    }
    out << "passes: " << r.passes << "\nS-polynomials examined: " << r.spolys_examined << '\n';
    out << "added: " << r.added.size() << '\n';
    for (auto const& a : r.added) {
      out << "  " << rule_string(a) << '\n';
    }
    auto const& e = untagged(r.system);
    std::size_t total = e.size();
    if constexpr (std::is_same_v<Report, MixedCompletionReport>) {
      total = r.system.size();
    }
    // An incomplete run has no basis, only the rules reached so far.
    out << (r.is_complete() ? "basis: " : "rules so far: ") << total << '\n';
    for (auto const& p : polys(e)) {
      out << "  " << to_string(p) << '\n';
    }
    if constexpr (std::is_same_v<Report, MixedCompletionReport>) {
      for (auto const& p : polys(r.system)) {
        out << "  " << to_string(p) << '\n';
      }
    }
    return out.str();
  }

  struct LimitOpts {
    Limits limits;
    void   add(CLI::App* app) {
      app->add_option("--max-rules", limits.max_rules, "Rule budget")->capture_default_str();
      app->add_option("--max-degree", limits.max_degree, "Leading-term length budget")
          ->capture_default_str();
      app->add_option("--max-passes", limits.max_passes, "Pass budget")->capture_default_str();
    }
  };

  std::map<std::string, std::string> provenance(Input const& in, Limits const& l) {
    return {{"input-sha256", in.sha256},
            {"max-degree", std::to_string(l.max_degree)},
            {"max-passes", std::to_string(l.max_passes)},
            {"max-rules", std::to_string(l.max_rules)},
            {"tool", std::string("kancat ") + version}};
  }

  int cmd_complete(Common const& c, LimitOpts const& lo, std::string const& out_file) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    std::string basis;
    int         code;
    if (p.has_gamma()) {
      auto r = complete_mixed(build_system(p.kan(), p.order), lo.limits);
      emit(c, report_json(r), report_text(r));
      code = r.is_complete() ? exit_ok : exit_undecided;
      if (r.is_complete()) {
        basis = serialize_basis(r.system, p, provenance(in, lo.limits));
      }
    } else {
      auto r = buchberger(p.system(), lo.limits);
      emit(c, report_json(r), report_text(r));
      code = r.is_complete() ? exit_ok : exit_undecided;
      if (r.is_complete()) {
        basis = serialize_basis(r.system, provenance(in, lo.limits));
      }
    }
    if (!out_file.empty()) {
      if (basis.empty()) {
        std::cerr << "kancat: no basis written: completion is incomplete\n";
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
          throw InputError{"cannot write '" + out_file + "'"};
        }
        f << basis;
      }
    }
    return code;
  }

  int cmd_check(Common const& c) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    bool ok;
    json j;
    std::string detail;
    if (p.has_gamma()) {
      auto sys = build_system(p.kan(), p.order);
      ok       = check_groebner(sys);
      if (!ok) {
        for (auto const& m : find_tagged_matches(sys)) {
          auto s = normal_form(s_polynomial(sys, m), sys);
          if (!s.is_zero()) {
            detail = to_string(s);
            break;
          }
        }
      }
    } else {
      auto sys = p.system();
      ok       = check_groebner(sys);
      if (!ok) {
        for (auto const& m : find_matches(sys)) {
          auto s = normal_form(s_polynomial(sys, m), sys);
          if (!s.is_zero()) {
            detail = to_string(s);
            break;
          }
        }
      }
    }
    j["groebner"] = ok;
    std::string text = ok ? "already a Gröbner basis\n" : "not a Gröbner basis\n";
    if (!ok && !detail.empty()) {
      j["witness"] = detail;
      text += "irreducible S-polynomial: " + detail + '\n';
    }
    emit(c, j, text);
    return ok ? exit_ok : exit_undecided;
  }

  int incomplete(Common const& c, std::string const& reason) {
    json j{{"status", "incomplete"}, {"reason", reason}};
    emit(c, j, "undecided: completion incomplete (" + reason + ")\n");
    return exit_undecided;
  }

  int cmd_reduce(Common const& c, LimitOpts const& lo, std::string const& poly, bool raw) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    bool tagged = poly.find('|') != std::string::npos;
    std::string result;
    if (tagged) {
      if (!p.has_gamma()) {
        throw Error(ErrorKind::semantic_error, "tagged input needs a [gamma] section");
      }
      auto sys = build_system(p.kan(), p.order);
      auto f   = parse_tagged_polynomial(poly, sys.order_handle());
      if (!raw) {
        auto r = complete_mixed(std::move(sys), lo.limits);
        if (!r.is_complete()) {
          return incomplete(c, r.reason);
        }
        sys = std::move(r.system);
      }
      result = to_string(normal_form(f, sys));
    } else {
      auto sys = p.system();
      auto f   = parse_polynomial(poly, p.order);
      if (!raw) {
        auto r = buchberger(std::move(sys), lo.limits);
        if (!r.is_complete()) {
          return incomplete(c, r.reason);
        }
        sys = std::move(r.system);
      }
      result = to_string(normal_form(f, sys));
    }
    emit(c, json{{"input", poly}, {"normal_form", result}}, result + '\n');
    return exit_ok;
  }

  int cmd_equal(Common const&      c,
                LimitOpts const&   lo,
                std::string const& lhs,
                std::string const& rhs,
                bool               two_sided) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    auto f = parse_polynomial(lhs, p.order);
    auto g = parse_polynomial(rhs, p.order);
    bool same;
    std::string kind;
    if (p.has_gamma() && !two_sided) {
      kind   = "right";
      auto r = complete_mixed(build_system(p.kan(), p.order), lo.limits);
      if (!r.is_complete()) {
        return incomplete(c, r.reason);
      }
      KanExtensionResult res{std::move(r), {}, {}};
      same = congruent_mod_right(res, f, g);
    } else {
      kind   = "two-sided";
      auto r = buchberger(p.system(), lo.limits);
      if (!r.is_complete()) {
        return incomplete(c, r.reason);
      }
      same = is_congruent(f, g, r.system);
    }
    emit(c,
         json{{"congruent", same}, {"congruence", kind}},
         same ? "congruent\n" : "not congruent\n");
    return exit_ok;
  }

  std::string finiteness_text(Quiver const& q, Finiteness const& f) {
    if (f.finite) {
      return "finite (" + std::to_string(f.count) + ")";
    }
    return "infinite (cycle " + to_string(q, *f.cycle) + ")";
  }

  json finiteness_json(Quiver const& q, Finiteness const& f) {
    json j{{"finite", f.finite}};
    if (f.finite) {
      j["count"] = f.count;
    } else {
      j["cycle"]  = to_string(q, *f.cycle);
      j["prefix"] = to_string(q, *f.prefix);
      j["suffix"] = to_string(q, *f.suffix);
    }
    return j;
  }

  int cmd_irr(Common const&      c,
              LimitOpts const&   lo,
              std::string const& src,
              std::string const& tgt,
              std::size_t        max_len) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    auto const& q = *p.delta;
    auto object = [&](std::string const& name) -> std::optional<ObjectId> {
      if (name.empty()) {
        return std::nullopt;
      }
      auto o = q.find_object(name);
      if (!o) {
        throw Error(ErrorKind::semantic_error, "unknown object '" + name + "'");
      }
      return o;
    };
    auto s = object(src);
    auto t = object(tgt);
    auto r = buchberger(p.system(), lo.limits);
    if (!r.is_complete()) {
      return incomplete(c, r.reason);
    }
    auto terms = irreducible_terms(r.system, s, t, max_len);
    json j{{"max_len", max_len}, {"terms", json::array()}};
    std::ostringstream out;
    for (auto const& path : terms) {
      j["terms"].push_back(to_string(q, path));
      out << to_string(q, path) << '\n';
    }
    // One verdict per hom-set in scope.
    j["hom_sets"] = json::array();
    for (std::uint32_t a = 0; a < q.num_objects(); ++a) {
      for (std::uint32_t b = 0; b < q.num_objects(); ++b) {
        if ((s && s->value != a) || (t && t->value != b)) {
          continue;
        }
        auto f = finiteness(r.system, ObjectId{a}, ObjectId{b});
        if (!s && !t && f.finite && f.count == 0) {
          continue;
        }
        auto name = q.object_name(ObjectId{a}) + " -> " + q.object_name(ObjectId{b});
        j["hom_sets"].push_back({{"src", q.object_name(ObjectId{a})},
                                 {"tgt", q.object_name(ObjectId{b})},
                                 {"finiteness", finiteness_json(q, f)}});
        out << "# " << name << ": " << finiteness_text(q, f) << '\n';
      }
    }
    emit(c, j, out.str());
    return exit_ok;
  }

  std::string render_columns(std::vector<std::string> const&              headers,
                             std::vector<std::vector<std::string>> const& cols) {
    std::vector<std::size_t> width;
    std::size_t              rows = 0;
    for (std::size_t i = 0; i < headers.size(); ++i) {
      std::size_t w = headers[i].size();
      for (auto const& cell : cols[i]) {
        w = std::max(w, cell.size());
      }
      width.push_back(w);
      rows = std::max(rows, cols[i].size());
    }
    std::ostringstream out;
    auto row = [&](auto&& cell) {
      std::string line;
      for (std::size_t i = 0; i < headers.size(); ++i) {
        auto s = cell(i);
        line += (i ? " | " : "") + s + std::string(width[i] - s.size(), ' ');
      }
      while (!line.empty() && line.back() == ' ') {
        line.pop_back();
      }
      out << line << '\n';
    };
    row([&](std::size_t i) { return headers[i]; });
    std::string rule;
    for (std::size_t i = 0; i < headers.size(); ++i) {
      rule += (i ? "-+-" : "") + std::string(width[i], '-');
    }
    out << rule << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      row([&](std::size_t i) { return r < cols[i].size() ? cols[i][r] : std::string(); });
    }
    return out.str();
  }

  int cmd_table(Common const& c, LimitOpts const& lo, std::size_t max_len) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    auto const& q = *p.delta;
    auto r = buchberger(p.system(), lo.limits);
    if (!r.is_complete()) {
      return incomplete(c, r.reason);
    }
    auto table = hom_table(r.system, max_len);
    std::vector<std::string>              headers;
    std::vector<std::vector<std::string>> cols;
    std::ostringstream                    footer;
    json                                  j = json::array();
    for (auto const& h : table) {
      bool only_identity = h.terms.size() == 1 && h.terms.front().is_identity()
                           && h.finiteness.finite;
      if (h.terms.empty() || only_identity) {
        continue;
      }
      auto name = q.object_name(h.src) + " -> " + q.object_name(h.tgt);
      std::vector<std::string> cells;
      json                     terms = json::array();
      for (auto const& path : h.terms) {
        cells.push_back(to_string(q, path));
        terms.push_back(to_string(q, path));
      }
      if (!h.finiteness.finite) {
        cells.push_back("...");
      }
      headers.push_back(name);
      cols.push_back(std::move(cells));
      footer << name << ": " << finiteness_text(q, h.finiteness) << '\n';
      j.push_back({{"src", q.object_name(h.src)},
                   {"tgt", q.object_name(h.tgt)},
                   {"terms", terms},
                   {"finiteness", finiteness_json(q, h.finiteness)}});
    }
    emit(c, json{{"max_len", max_len}, {"hom_sets", j}},
         render_columns(headers, cols) + '\n' + footer.str());
    return exit_ok;
  }

  int cmd_kan(Common const& c, LimitOpts const& lo, std::size_t max_len) {
    auto in = load(c.file);
    auto const& p = in.presentation;
    if (!p.has_gamma()) {
      throw Error(ErrorKind::semantic_error, "the kan command needs a [gamma] section");
    }
    std::optional<KanExtensionResult> computed;
    try {
      computed = kan_extension(p.kan(), p.order, max_len, lo.limits);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::incomplete) {
        throw;
      }
      return incomplete(c, e.what());
    }
    auto const& res = *computed;
    auto const& q   = *p.delta;
    auto const& sys = res.mixed();
    auto const& to  = sys.order();

    json j;
    j["rules"]        = poly_list(polys(sys.e_rules()));
    j["tagged_rules"] = poly_list(polys(sys));
    json eps          = json::object();
    std::ostringstream out;
    out << "mixed basis: " << sys.size() << '\n';
    for (auto const& s : polys(sys.e_rules())) {
      out << "  " << to_string(s) << '\n';
    }
    for (auto const& s : polys(sys)) {
      out << "  " << to_string(s) << '\n';
    }
    out << "eps:\n";
    for (std::uint32_t a = 0; a < res.eps.size(); ++a) {
      auto const& name = p.gamma->object_name(ObjectId{a});
      eps[name]        = to_string(res.eps[a]);
      out << "  " << name << " -> " << to_string(res.eps[a]) << '\n';
    }
    j["eps"]    = eps;
    j["fibers"] = json::array();
    for (auto const& f : res.fibers) {
      json terms = json::array();
      out << "E(" << q.object_name(f.object) << "): " << finiteness_text(q, f.finiteness) << '\n';
      for (auto const& t : f.terms) {
        terms.push_back(to_string(to, t));
        out << "  " << to_string(to, t) << '\n';
      }
      if (!f.finiteness.finite) {
        out << "  ...\n";
      }
      j["fibers"].push_back({{"object", q.object_name(f.object)},
                             {"terms", terms},
                             {"finiteness", finiteness_json(q, f.finiteness)}});
    }
    emit(c, j, out.str());
    return exit_ok;
  }

  std::string describe(Error const& e, std::string const& file) {
    std::string where = file == "-" ? "<stdin>" : file;
    if (e.where()) {
      where += ":" + std::to_string(e.where()->line) + ":" + std::to_string(e.where()->column);
    }
    std::string msg = e.what();
    // Messages from located errors already carry "line L, column C: ".
    if (e.where()) {
      if (auto k = msg.find(": "); k != std::string::npos && msg.rfind("line ", 0) == 0) {
        msg = msg.substr(k + 2);
      }
    }
    return where + ": " + std::string(to_string(e.kind())) + ": " + msg;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Gröbner bases for path algebras and left Kan extensions"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);

  Common    common;
  LimitOpts limits;
  auto      add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", common.file, "Presentation file, or - for stdin")->required();
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    limits.add(sub);
  };

  std::string out_file, poly, lhs, rhs, src, tgt;
  bool        raw = false, two_sided = false;
  std::size_t max_len = 8;

  auto* complete = app.add_subcommand("complete", "Complete the relations to a Gröbner basis");
  add_common(complete);
  complete->add_option("--out", out_file, "Write the completed basis to this file");

  auto* check = app.add_subcommand("check", "Test whether the relations are a Gröbner basis");
  add_common(check);

  auto* reduce = app.add_subcommand("reduce", "Normal form of a polynomial");
  add_common(reduce);
  reduce->add_option("POLY", poly, "Polynomial, tagged when it contains '|'")->required();
  reduce->add_flag("--raw", raw, "Reduce by the relations as given, without completing");

  auto* equal = app.add_subcommand("equal", "Decide whether two polynomials are congruent");
  add_common(equal);
  equal->add_option("P", lhs)->required();
  equal->add_option("Q", rhs)->required();
  equal->add_flag("--two-sided", two_sided,
                  "Use the two-sided congruence even when [gamma] is present");

  auto* irr = app.add_subcommand("irr", "List irreducible paths");
  add_common(irr);
  irr->add_option("--src", src, "Source object");
  irr->add_option("--tgt", tgt, "Target object");
  irr->add_option("--max-len", max_len, "Length bound")->capture_default_str();

  auto* table = app.add_subcommand("table", "Hom-set tables with finiteness");
  add_common(table);
  table->add_option("--max-len", max_len, "Length bound for infinite hom-sets")
      ->capture_default_str();

  auto* kan = app.add_subcommand("kan", "Left Kan extension: basis, eps and mixed basis");
  add_common(kan);
  kan->add_option("--max-len", max_len, "Length bound for infinite fibers")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*complete) {
      return cmd_complete(common, limits, out_file);
    }
    if (*check) {
      return cmd_check(common);
    }
    if (*reduce) {
      return cmd_reduce(common, limits, poly, raw);
    }
    if (*equal) {
      return cmd_equal(common, limits, lhs, rhs, two_sided);
    }
    if (*irr) {
      return cmd_irr(common, limits, src, tgt, max_len);
    }
    if (*table) {
      return cmd_table(common, limits, max_len);
    }
    if (*kan) {
      return cmd_kan(common, limits, max_len);
    }
  } catch (InputError const& e) {
    std::cerr << "kancat: " << e.message << '\n';
    return exit_input;
  } catch (Error const& e) {
    std::cerr << "kancat: " << describe(e, common.file) << '\n';
    switch (e.kind()) {
      case ErrorKind::incomplete:
      case ErrorKind::not_complete:
      case ErrorKind::internal_limit:
        return exit_undecided;
      default:
        return exit_input;
    }
  } catch (std::exception const& e) {
    std::cerr << "kancat: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
