// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Usage: acceptance <kancat-cli> <data-dir>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kancat/completion.hpp"
#include "kancat/io.hpp"
#include "kancat/kan.hpp"
#include "kancat/nf_enum.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace kancat;

namespace {

  std::string g_cli;
  std::string g_data;

  Presentation load(std::string const& name) {
    return parse_presentation(support::read_file(g_data + "/" + name));
  }

  using Strings = std::vector<std::string>;

  std::string join(Strings const& v) {
    std::string out;
    for (auto const& s : v) {
      out += (out.empty() ? "" : ", ") + s;
    }
    return "{" + out + "}";
  }

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  struct Verdict {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  // Expected values, written as the library prints them.

  char const* const expected_added = "e3*e2*e1*e3 - e2*e3*e2*e1 + 2/9 e2*e1 - 2/9 e1*e3";

  Strings const expected_irr = {
      "1(B)",
      "e1", "e2", "e3",
      "e1*e2", "e1*e3", "e2*e1", "e2*e3", "e3*e2",
      "e1*e2*e1", "e1*e2*e3", "e1*e3*e2", "e2*e1*e3", "e2*e3*e2", "e3*e2*e1",
      "e1*e2*e1*e3", "e1*e2*e3*e2", "e1*e3*e2*e1", "e2*e1*e3*e2", "e2*e3*e2*e1"};

  Strings const expected_mixed = {
      "e1*e1 - e1",
      "e2*e2 - e2",
      "e3*e3 - e3",
      "e3*e1 - e1*e3",
      "e2*e1*e2 - e1*e2*e1 + 2/9 e2 - 2/9 e1",
      "e3*e2*e3 - e2*e3*e2 + 2/9 e3 - 2/9 e2",
      "e3*e2*e1*e3 - e2*e3*e2*e1 + 2/9 e2*e1 - 2/9 e1*e3",
      "A|e2*e1 - A|1",
      "A|e1 - A|1"};

  Strings const expected_kan_irr = {
      "A|1", "A|e2", "A|e3", "A|e2*e3", "A|e3*e2", "A|e2*e3*e2", "A|e3*e2*e1",
      "A|e2*e3*e2*e1"};

  struct ExpectedColumn {
    char const* src;
    char const* tgt;
    Strings     terms;
    bool        infinite = false;
    char const* cycle    = "";
  };

  // Hom-sets consisting solely of identities are omitted, as listed.
  std::vector<ExpectedColumn> const expected_table = {
      {"B1", "B2", {"a", "a*b", "a*b*b"}},
      {"B1", "B3", {"a*c", "a*b*c", "a*b*b*c"}},
      {"B1", "B4", {"h", "e*f"}},
      {"B1", "B5", {"e"}},
      {"B2", "B2", {"1(B2)", "b", "b*b"}, true, "b"},
      {"B2", "B3", {"c", "b*c", "b*b*c"}},
      {"B4", "B3", {"g"}},
      {"B5", "B4", {"f"}},
      {"B5", "B3", {"j"}},
  };

  Strings path_strings(Quiver const& q, std::vector<Path> const& ps) {
    Strings out;
    for (auto const& p : ps) {
      out.push_back(to_string(q, p));
    }
    return out;
  }

  std::set<std::string> as_set(Strings const& v) {
    return {v.begin(), v.end()};
  }

  Verdict criterion1() {
    Verdict v;
    auto    p  = load("hecke.kan");
    auto    t0 = std::chrono::steady_clock::now();
    auto    r  = buchberger(p.system());
    auto    dt = seconds_since(t0);
    v.require(r.is_complete(), "completion did not finish: " + r.reason);
    Strings added;
    for (auto const& rule : r.added) {
      added.push_back(to_string(rule.poly()));
    }
    v.require(added == Strings{expected_added},
              "added " + join(added) + ", expected {" + expected_added + "}");
    v.require(r.system.size() == 7, "basis size " + std::to_string(r.system.size()));
    v.require(check_groebner(r.system), "is_groebner false on the result");
    v.require(dt < 1.0, "took " + std::to_string(dt) + " s");
    return v;
  }

  Verdict criterion2() {
    Verdict v;
    auto    p   = load("hecke.kan");
    auto    sys = buchberger(p.system()).system;
    auto    got = path_strings(*p.delta, irreducible_terms(sys, std::nullopt, std::nullopt, 32));
    auto    f   = finiteness(sys, ObjectId{0}, ObjectId{0});
    if (as_set(got) != as_set(expected_irr)) {
      Strings extra, missing;
      for (auto const& s : got) {
        if (!as_set(expected_irr).contains(s)) {
          extra.push_back(s);
        }
      }
      for (auto const& s : expected_irr) {
        if (!as_set(got).contains(s)) {
          missing.push_back(s);
        }
      }
      v.require(false, std::to_string(got.size()) + " irreducible terms, expected "
                           + std::to_string(expected_irr.size()) + "; not expected: "
                           + join(extra) + "; missing: " + join(missing));
    }
    v.require(f.finite && f.count == 20,
              "finiteness " + (f.finite ? "Finite(" + std::to_string(f.count) + ")"
                                        : std::string("Infinite"))
                  + ", expected Finite(20)");
    return v;
  }

  Verdict criterion3() {
    Verdict v;
    auto    p  = load("hecke-q.kan");
    auto    t0 = std::chrono::steady_clock::now();
    auto    m  = complete_mixed(build_system(p.kan(), p.order));
    v.require(m.is_complete(), "mixed completion did not finish: " + m.reason);
    Strings basis;
    for (auto const& r : m.system.e_rules().rules()) {
      basis.push_back(to_string(r.poly()));
    }
    for (auto const& r : m.system.eps_rules()) {
      basis.push_back(to_string(r.poly()));
    }
    if (as_set(basis) != as_set(expected_mixed)) {
      Strings extra, missing;
      for (auto const& s : basis) {
        if (!as_set(expected_mixed).contains(s)) {
          extra.push_back(s);
        }
      }
      for (auto const& s : expected_mixed) {
        if (!as_set(basis).contains(s)) {
          missing.push_back(s);
        }
      }
      v.require(false, "mixed basis of " + std::to_string(basis.size()) + " differs; not expected: "
                           + join(extra) + "; missing: " + join(missing));
    }
    auto    res = kan_extension(p.kan(), p.order, 16);
    Strings irr;
    for (auto const& t : res.fibers.at(0).terms) {
      irr.push_back(to_string(res.mixed().order(), t));
    }
    v.require(as_set(irr) == as_set(expected_kan_irr),
              "IRR " + join(irr) + ", expected " + join(expected_kan_irr));
    auto poly = [&](char const* s) { return parse_polynomial(s, p.order); };
    v.require(congruent_mod_right(res, poly("e1*e2*e3"), poly("e2*e3")),
              "e1e2e3 and e2e3 not right congruent");
    auto dt = seconds_since(t0);
    v.require(dt < 1.0, "took " + std::to_string(dt) + " s");
    return v;
  }

  Verdict criterion4() {
    Verdict v;
    auto    p   = load("five-objects.kan");
    auto    t0  = std::chrono::steady_clock::now();
    auto    sys = p.system();
    v.require(is_groebner(sys), "is_groebner false on the 5 given relations");
    if (!sys.is_complete()) {
      // The table is only defined for a Gröbner basis; use the completion
      // to report how far the expected table is from the true one.
      auto r = buchberger(p.system());
      Strings added;
      for (auto const& rule : r.added) {
        added.push_back(to_string(rule.poly()));
      }
      v.require(false, "completion adds " + join(added));
      sys = r.system;
    }
    auto const& q     = *p.delta;
    auto        table = hom_table(sys, 8);
    for (auto const& h : table) {
      auto got = path_strings(q, h.terms);
      bool identity_only = h.finiteness.finite && got.size() <= 1 && h.src == h.tgt;
      auto col = std::find_if(expected_table.begin(), expected_table.end(), [&](auto const& c) {
        return q.object(c.src) == h.src && q.object(c.tgt) == h.tgt;
      });
      std::string name = q.object_name(h.src) + "->" + q.object_name(h.tgt);
      if (col == expected_table.end()) {
        v.require(identity_only || got.empty(), name + " not expected but has " + join(got));
        continue;
      }
      if (col->infinite) {
        v.require(!h.finiteness.finite, name + " finite, expected infinite");
        if (!h.finiteness.finite) {
          v.require(to_string(q, *h.finiteness.cycle) == col->cycle,
                    name + " witness " + to_string(q, *h.finiteness.cycle));
          Strings head(got.begin(), got.begin() + std::min(got.size(), col->terms.size()));
          v.require(head == col->terms, name + " starts " + join(head));
        }
        continue;
      }
      v.require(h.finiteness.finite, name + " infinite, expected finite");
      v.require(as_set(got) == as_set(col->terms),
                name + " " + join(got) + ", expected " + join(col->terms));
    }
    auto dt = seconds_since(t0);
    v.require(dt < 1.0, "took " + std::to_string(dt) + " s");
    return v;
  }

  Verdict criterion5() {
    Verdict v;
    auto    r = support::oracle_suite(20240611, 50);
    v.require(r.presentations >= 50,
              "only " + std::to_string(r.presentations) + " presentations completed");
    v.require(r.agreeing == r.presentations,
              std::to_string(r.presentations - r.agreeing) + " disagreements, first: "
                  + r.first_failure);
    v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(r.agreeing) + "/"
                + std::to_string(r.presentations) + " presentations agree, "
                + std::to_string(r.pairs) + " word pairs, oracle bound <= "
                + std::to_string(r.max_bound);
    return v;
  }

  Verdict criterion6() {
    Verdict         v;
    std::mt19937_64 rng(6);
    std::size_t     checked = 0;
    auto            check   = [&](std::string const& name, std::size_t bad, std::size_t n) {
      checked += n;
      v.require(bad == 0, name + ": " + std::to_string(bad) + " of " + std::to_string(n) + " differ");
    };
    for (auto name : {"hecke.kan", "five-objects.kan"}) {
      auto r = buchberger(load(name).system());
      check(name, support::confluence_failures(r.system, rng, 1000), 1000);
    }
    auto p = load("hecke-q.kan");
    auto m = complete_mixed(build_system(p.kan(), p.order));
    check("hecke-q.kan (mixed)", support::confluence_failures(m.system, rng, 1000), 1000);
    std::mt19937_64 gen(66);
    for (int done = 0, attempt = 0; done < 10 && attempt < 200; ++attempt) {
      auto rp  = support::random_presentation(gen);
      auto rep = buchberger(parse_presentation(rp.text).system(), Limits{40, 10, 30});
      if (rep.is_complete()) {
        ++done;
        check("random #" + std::to_string(done),
              support::confluence_failures(rep.system, rng, 1000, 6), 1000);
      }
    }
    if (v.pass) {
      v.detail = std::to_string(checked) + " polynomials agree";
    }
    return v;
  }

  Verdict criterion7() {
    Verdict         v;
    auto            p   = load("hecke-q.kan");
    auto            res = kan_extension(p.kan(), p.order, 16);
    std::mt19937_64 rng(7);
    auto            bad = support::functoriality_failures(res, rng, 500);
    v.require(bad == 0, std::to_string(bad) + " of 500 word pairs differ");
    if (v.pass) {
      v.detail = "500 word pairs agree";
    }
    return v;
  }

  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run_cli(std::string const& args) {
    Run   r;
    auto  cmd  = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buf;
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  Verdict criterion8() {
    Verdict v;
    auto    p = load("runaway.kan");
    auto    r = buchberger(p.system(), Limits{20, 50, 100});
    v.require(r.outcome == Outcome::incomplete, "library outcome not Incomplete");
    v.require(!r.reason.empty() && r.passes > 0 && !r.added.empty(), "library report not populated");
    v.require(r.system.status() == Status::candidate, "partial system marked complete");

    auto c = run_cli("complete " + g_data + "/runaway.kan --max-rules 20");
    v.require(c.code == 1, "CLI exit code " + std::to_string(c.code));
    v.require(c.out.find("status: incomplete") != std::string::npos, "CLI report lacks status");
    v.require(c.out.find("max-rules") != std::string::npos, "CLI report lacks the limit");
    std::istringstream lines(c.out);
    for (std::string line; std::getline(lines, line);) {
      v.require(line.rfind("basis:", 0) != 0, "CLI printed a basis");
    }
    if (v.pass) {
      v.detail = "exit 1, " + r.reason;
    }
    return v;
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <kancat-cli> <data-dir>\n";
    return 2;
  }
  g_cli  = argv[1];
  g_data = argv[2];

  std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3,
                                                    criterion4, criterion5, criterion6,
                                                    criterion7, criterion8};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (std::exception const& e) {
      v.pass   = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all = all && v.pass;
    std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL");
    if (!v.detail.empty()) {
      std::cout << " - " << v.detail;
    }
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
