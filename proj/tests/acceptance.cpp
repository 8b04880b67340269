// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "minext/minext.hpp"

using namespace minext;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
  void suite(const VerificationReport& r) {
    require(r.ok(), r.summary());
    if (!r.ok())
      for (const auto& f : r.failures) why << " {" << f.instance << ": " << f.assertion << "}";
  }
};

bool has_line(const VerificationReport& r, const std::string& text) {
  for (const auto& l : r.lines)
    if (l.find(text) != std::string::npos) return true;
  return false;
}

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) o.require(s < limit_s, "time limit " + std::to_string(limit_s) + " s");
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", s);
  std::cout << "CRITERION " << n << " " << (o.ok ? "PASS" : "FAIL") << "  " << name << " (" << time << ")"
            << o.why.str() << std::endl;
  if (!o.ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "order-4 census", 5, [](Outcome& o) {
    const auto r = run_suite("order4-census");
    o.suite(r);
    const auto classes = brute::order4_char2_rings();
    o.require(classes.size() == 3, "3 classes");
    int fields = 0, products = 0, dual = 0;
    for (const auto& t : classes) {
      const auto p = brute::profile(t);
      fields += p.field;
      products += !p.field && p.idempotents == 4;
      dual += p.nilpotents == 1;
    }
    o.require(fields == 1 && products == 1 && dual == 1, "F_4, F_2 x F_2, F_2[x]/(x^2)");
  });

  criterion(2, "subrings over R match R-subrngs", 30, [](Outcome& o) {
    const auto r = run_suite("produce");
    o.suite(r);
    o.require(r.instances >= 10, ">= 10 instances");
    o.require(has_line(r, "as_rrng(gf(2),gf(4)): 3 subrings over R, 3 R-subrngs"), "F_4 over F_2 has 3");
  });

  criterion(3, "ideal description of E(R,I)", 60, [](Outcome& o) {
    const auto r = run_suite("idealdescription");
    o.suite(r);
    o.require(has_line(r, "ideal_as_rrng(gf(2),1): 4 ideals"), "E(F_2, F_2) has 4 ideals");
    o.require(has_line(r, "regular(mat(2,2)): 4 ideals"), "256-element instance");
    o.require(has_line(r, "quotient_rrng(zmod(4),2):"), "Z/4 quotient instance");
  });

  criterion(4, "semiprime and prime ideal extensions", 0, [](Outcome& o) {
    for (const char* id : {"semiprimeoversemiprime", "primeidealext"}) {
      const auto r = run_suite(id);
      o.suite(r);
      o.require(r.instances >= 15, std::string(id) + " >= 15 instances");
    }
  });

  criterion(5, "central extension criteria", 0, [](Outcome& o) {
    o.suite(run_suite("maincentral"));
    o.suite(run_suite("centralchar"));
    o.require(!is_central_extension(*catalog_embedding("trivial_extension(twisted_field(4,1))")), "F_4 with F_4^s non-central");
    o.require(!is_central_extension(*catalog_embedding("regular_embed(4,2)")), "F_4 in M_2(F_2) non-central");
    for (const char* s : {"embed(gf(2),gf(4))", "diagonal(gf(2))", "ideal_extension(zero_bimodule(gf(2),0))"})
      o.require(is_central_extension(*catalog_embedding(s)), std::string(s) + " central");
  });

  criterion(6, "five-way classification", 0, [](Outcome& o) {
    for (const char* id : {"primeext", "simplechar", "no-finite-T2"}) o.suite(run_suite(id));
    std::map<ExtTag, int> census;
    for (const auto& spec : suites::extension_corpus()) {
      const auto e = catalog_embedding(spec);
      if (!is_prime(*e->small) || !is_maximal_subring(*e)) continue;
      ++census[classify_minimal_extension(*e).tag];
    }
    std::ostringstream c;
    for (ExtTag t : {ExtTag::P, ExtTag::PI, ExtTag::SR, ExtTag::SI, ExtTag::N}) c << tag_name(t) << "=" << census[t] << " ";
    o.require(census[ExtTag::P] > 0 && census[ExtTag::SI] > 0 && census[ExtTag::N] > 0, "P, SI, N nonempty: " + c.str());
    o.require(census[ExtTag::PI] == 0 && census[ExtTag::SR] == 0, "PI, SR empty: " + c.str());
  });

  criterion(7, "annihilators of minimal R-rngs", 0, [](Outcome& o) {
    o.suite(run_suite("minimalann"));
    const auto ann = annihilators(*catalog_rrng("ideal_as_rrng(zmod(4),2)"));
    o.require(ann.two_sided.members() == std::vector<Index>{0, 2}, "Z/4 annihilator {0, 2}");
  });

  criterion(8, "Bergman finite levels", 10, [](Outcome& o) {
    o.suite(run_suite("bergman-levels"));
    for (std::size_t n : {1, 2}) o.require(bergman_violations(make_bergman_level(n, 2)).empty(), "level " + std::to_string(n));
  });

  criterion(9, "finite-index witness", 0, [](Outcome& o) { o.suite(run_suite("finiteindex-witness")); });

  criterion(10, "hom engine against function scan", 0, [](Outcome& o) {
    const auto r = run_suite("hom-oracle");
    o.suite(r);
    o.require(r.instances > 0, "instances");
  });

  criterion(11, "partial reduction", 0, [](Outcome& o) {
    const auto r = run_suite("partialreduction");
    o.suite(r);
    o.require(has_line(r, "ideal_extension(zero_bimodule(gf(2),0))"), "F_2 in F_2[x]/(x^2)");
  });

  std::cout << (failures ? "ACCEPTANCE FAIL" : "ACCEPTANCE PASS") << std::endl;
  return failures ? 1 : 0;
}
