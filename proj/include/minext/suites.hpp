#pragma once

/**
 * @file suites.hpp
 * @brief Named verification suites: each runs one result's assertions over a
 * corpus and returns a deterministic report.
 */

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "minext/brute.hpp"
#include "minext/catalog.hpp"
#include "minext/classify.hpp"

namespace minext {

struct Failure {
  std::string instance;
  std::string assertion;
  std::string witness;
};

struct VerificationReport {
  std::string suite_id;
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::vector<Failure> failures;
  std::vector<std::string> lines;  // one per instance, in instance order
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  std::string summary() const {
    std::ostringstream os;
    os << "SUITE " << suite_id << ": " << passes << "/" << instances << (ok() ? " PASS" : " FAIL");
    return os.str();
  }

  std::string text() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << "\n";
    for (const auto& f : failures)
      os << "failure " << f.instance << ": " << f.assertion << (f.witness.empty() ? "" : " [" + f.witness + "]") << "\n";
    for (const auto& n : notes) os << "note " << n << "\n";
    os << summary() << "\n";
    return os.str();
  }
};

struct SuiteOptions {
  std::size_t max_order = 65536;  // instances whose largest ring exceeds this are skipped
  unsigned jobs = 1;
  Caps caps{};
};

/// Assertion sink for one instance.  The first failed assertion is the one
/// reported; later ones are still evaluated so notes stay complete.
class Probe {
 public:
  explicit Probe(std::string id = {}) : id_(std::move(id)) {}

  bool expect(bool ok, const std::string& assertion, const std::string& witness = {}) {
    if (!ok && !failed_) {
      failed_ = true;
      failure_ = {id_, assertion, witness};
    }
    return ok;
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  void tally(const std::string& key, long by = 1) { tally_[key] += by; }
  void detail(std::string s) { detail_ = std::move(s); }

  const std::string& id() const { return id_; }
  bool failed() const { return failed_; }
  const Failure& failure() const { return failure_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::map<std::string, long>& tallies() const { return tally_; }
  const std::string& detail_text() const { return detail_; }

 private:
  std::string id_;
  bool failed_ = false;
  Failure failure_;
  std::vector<std::string> notes_;
  std::map<std::string, long> tally_;
  std::string detail_;
};

namespace suites {

struct Task {
  std::string id;
  std::size_t order = 0;  // size of the largest ring the instance builds
  std::function<void(Probe&)> run;
};

struct Suite {
  std::vector<Task> tasks;
  // optional extra instance judged on all per-instance probes
  std::function<void(const std::vector<Probe>&, Probe&)> aggregate;
};

// ---------------------------------------------------------------- corpus

inline const std::vector<std::string>& minimal_corpus() {
  static const std::vector<std::string> c = {
      "zero_bimodule(gf(2),0)",
      "ideal_as_rrng(gf(2),1)",
      "ideal_as_rrng(zmod(4),2)",
      "zero_bimodule(zmod(4),2)",
      "quotient_rrng(zmod(4),2)",
      "regular(gf(3))",
      "zero_bimodule(gf(3),0)",
      "regular(gf(4))",
      "zero_bimodule(gf(4),0)",
      "twisted_field(4,1)",
      "ideal_as_rrng(product(gf(2),gf(2)),2)",
      "quotient_rrng(tri(2,2),4)",
      "zero_bimodule(tri(2,2),1)",
      "ideal_as_rrng(tri(2,2),2)",
      "ideal_as_rrng(zmod(8),4)",
      "ideal_as_rrng(zmod(9),3)",
      "regular(gf(8))",
      "twisted_field(8,1)",
      "regular(gf(9))",
      "twisted_field(9,1)",
      "quotient_rrng(product(gf(2),gf(3)),3)",
      "ideal_as_rrng(product(gf(2),gf(3)),3)",
      "regular(mat(2,2))",
      "zero_bimodule(mat(2,2),0)",
  };
  return c;
}

inline const std::vector<std::string>& nonminimal_corpus() {
  static const std::vector<std::string> c = {
      "as_rrng(gf(2),gf(4))", "ideal_as_rrng(zmod(8),2)", "regular(zmod(4))",
      "regular(product(gf(2),gf(2)))", "regular(tri(2,2))",
  };
  return c;
}

/// Ring extensions R in S given directly, plus E(R,I) for every minimal
/// corpus entry.
inline std::vector<std::string> extension_corpus() {
  std::vector<std::string> c = {
      "embed(gf(2),gf(4))", "embed(gf(2),gf(8))", "embed(gf(3),gf(9))",      "regular_embed(4,2)",
      "regular_embed(9,3)", "diagonal(gf(2))",    "diagonal(gf(4))",         "diagonal(mat(2,2))",
      "tri_in_mat(2,2)",    "trivial_extension(twisted_field(4,1))",
  };
  for (const auto& m : minimal_corpus()) c.push_back("ideal_extension(" + m + ")");
  return c;
}

inline std::size_t extension_order(const RRng& m) { return m.base().order() * m.order(); }

// ---------------------------------------------------------------- helpers

inline std::string set_str(const ElementSet& s) { return s.str(); }

/// ann(I_E), ann(_E I) with I = 0 + I inside E(R,I).
inline AnnihilatorTriple annihilators_in_extension(const IdealExtension& x) {
  return annihilators(induced_rrng(regular_rrng(x.ring), x.ideal).rrng);
}

inline bool hom_to_quotient_nonzero(const RRng& m, const Caps& caps) {
  return has_nonzero_rhom(m, quotient_rrng(m.base_ptr(), annihilators(m).two_sided), true, caps);
}

inline bool hom_to_base_nonzero(const RRng& m, const Caps& caps) {
  return has_nonzero_rhom(m, regular_rrng(m.base_ptr()), true, caps);
}

/// Prime and semiprime read off the ideal lattice, independent of the
/// elementwise criteria.
inline bool prime_by_ideals(const FiniteRing& s, const Caps& caps) {
  const auto ideals = enumerate_ideals(s, caps);
  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      if (a.is_zero() || b.is_zero()) continue;
      bool nonzero = false;
      for (auto x : a)
        for (auto y : b) nonzero = nonzero || s.mul(x, y) != 0;
      if (!nonzero) return false;
    }
  return true;
}

inline bool semiprime_by_ideals(const FiniteRing& s, const Caps& caps) {
  for (const auto& a : enumerate_ideals(s, caps)) {
    if (a.is_zero()) continue;
    bool nonzero = false;
    for (auto x : a)
      for (auto y : a) nonzero = nonzero || s.mul(x, y) != 0;
    if (!nonzero) return false;
  }
  return true;
}

inline bool has_nonzero_central_idempotent(const FiniteRng& i) {
  for (std::size_t e = 1; e < i.order(); ++e) {
    const Index x = static_cast<Index>(e);
    if (i.mul(x, x) != x) continue;
    bool central = true;
    for (std::size_t b = 0; b < i.rank() && central; ++b) central = i.mul(x, i.basis(b)) == i.mul(i.basis(b), x);
    if (central) return true;
  }
  return false;
}

template <class Fn>
void for_rrngs(Suite& s, const std::vector<std::string>& specs, Fn fn) {
  for (const auto& spec : specs) {
    Task t;
    t.id = spec;
    const auto m = catalog_rrng(spec);
    t.order = extension_order(*m);
    t.run = [m, fn](Probe& p) { fn(*m, p); };
    s.tasks.push_back(std::move(t));
  }
}

template <class Fn>
void for_embeddings(Suite& s, const std::vector<std::string>& specs, Fn fn) {
  for (const auto& spec : specs) {
    Task t;
    t.id = spec;
    const auto e = catalog_embedding(spec);
    t.order = e->big->order();
    t.run = [e, fn](Probe& p) { fn(*e, p); };
    s.tasks.push_back(std::move(t));
  }
}

inline std::vector<std::string> all_rrngs() {
  auto v = minimal_corpus();
  const auto& n = nonminimal_corpus();
  v.insert(v.end(), n.begin(), n.end());
  return v;
}

// ---------------------------------------------------------------- suites

inline Suite minimalann(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const FiniteRing& r = m.base();
    p.expect(is_minimal_rrng(m, caps), "corpus entry is a minimal R-rng");
    const auto t = annihilators(m);
    p.detail("ann_R(I) = " + t.two_sided.str());
    p.expect(is_prime_ideal(r, t.right), "ann(I_R) is prime", t.right.str());
    p.expect(is_prime_ideal(r, t.left), "ann(_R I) is prime", t.left.str());
    p.expect(is_semiprime_ideal(r, t.two_sided), "ann_R(I) is semiprime", t.two_sided.str());
    if (!m.zero_product()) {
      p.expect(t.right == t.left && t.left == t.two_sided, "I^2 != 0: the three annihilators coincide");
      p.expect(is_prime_ideal(r, t.two_sided), "I^2 != 0: ann_R(I) is prime");
      p.expect(enumerate_ideals(m.rng(), caps).size() == 2, "I^2 != 0: I is simple as a rng");
    }
  });
  return s;
}

inline Suite produce(const Caps& caps) {
  Suite s;
  for_rrngs(s, all_rrngs(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const auto c = subrings_over(x, caps);
    const auto rs = rsubrngs(m, caps);
    p.detail(std::to_string(c.pairs.size()) + " subrings over R, " + std::to_string(rs.size()) + " R-subrngs");
    p.expect(c.pairs.size() == rs.size(), "subring count over R equals R-subrng count",
             std::to_string(c.pairs.size()) + " vs " + std::to_string(rs.size()));
    p.expect(c.bijective, "S -> S cap I is a bijection onto the R-subrngs");
    p.expect(c.order_preserving, "the correspondence preserves and reflects inclusion");
    p.expect(is_maximal_subring(x.base_embedding, caps) == is_minimal_rrng(m, caps),
             "E(R,I) minimal over R iff I minimal");
  });
  return s;
}

inline Suite posers(const Caps& caps) {
  Suite s;
  for_rrngs(s, all_rrngs(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const auto homs = enumerate_rhoms(m, regular_rrng(m.base_ptr()), {}, caps);
    const auto base = x.base_embedding.image();
    std::set<ElementSet> complements;
    for (const auto& k : enumerate_ideals(*x.ring, caps))
      if (k.size() == m.order() && intersect(k, base).is_zero()) complements.insert(k);
    std::set<ElementSet> built;
    for (const auto& h : homs) {
      const auto k = i_phi(x, h.values);
      p.expect(is_ideal(*x.ring, k), "I_phi is an ideal", k.str());
      built.insert(k);
    }
    p.detail(std::to_string(homs.size()) + " homs, " + std::to_string(complements.size()) + " complements");
    p.expect(built.size() == homs.size(), "phi -> I_phi is injective");
    p.expect(built == complements, "the I_phi are exactly the ideals complementing R");
  });
  return s;
}

inline Suite suffiso(const Caps& caps) {
  Suite s;
  for_rrngs(s, all_rrngs(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    std::size_t checked = 0;
    for (const auto& h : enumerate_rhoms(m, regular_rrng(m.base_ptr()), {}, caps)) {
      if (!h.injective(m.base().order())) continue;
      const auto k = i_phi(x, h.values);
      const auto rec = recover_ideal_extension(x.base_embedding, k, caps);
      std::vector<Index> phi_map(m.order());
      for (std::size_t i = 0; i < m.order(); ++i)
        phi_map[i] = rec.extension.ideal_part(rec.iso[x.pair(h.values[i], m.rng().neg(static_cast<Index>(i)))]);
      p.expect(is_rhom(m, rec.rrng, phi_map) && injective_table(phi_map, rec.rrng.order()),
               "i -> (phi(i), -i) is an R-isomorphism I -> I_phi", k.str());
      ++checked;
    }
    p.detail(std::to_string(checked) + " injective homs");
    p.tally("injective", static_cast<long>(checked));
  });
  s.aggregate = [](const std::vector<Probe>& all, Probe& p) {
    long n = 0;
    for (const auto& q : all)
      if (auto it = q.tallies().find("injective"); it != q.tallies().end()) n += it->second;
    p.detail(std::to_string(n) + " injective homs checked");
    p.expect(n > 0, "the corpus exercises at least one injective hom");
  };
  return s;
}

inline Suite idealcancel(const Caps& caps) {
  Suite s;
  // every ideal complementing R in a relabeled copy of E(R,I) gives an
  // R-rng I' with E(R,I') = E(R,I); the class of I must follow
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const auto shuffled = shuffled_presentation(x.base_embedding, 0x5eed);
    const auto base = shuffled.image();
    std::size_t seen = 0;
    for (const auto& j : enumerate_ideals(*shuffled.big, caps)) {
      if (j.size() != m.order() || !intersect(j, base).is_zero()) continue;
      const auto rec = recover_ideal_extension(shuffled, j, caps);
      p.expect(find_r_isomorphism(x.base_embedding, rec.extension.base_embedding).has_value(),
               "E(R,I) and E(R,I') are R-isomorphic", j.str());
      p.expect(r_isomorphic(m, rec.rrng, caps), "I and I' are R-isomorphic", j.str());
      ++seen;
    }
    p.expect(seen > 0, "the relabeled extension has an ideal complementing R");
    p.detail(std::to_string(seen) + " complements");
  });
  // distinct corpus entries over one base with equal order: R-isomorphic
  // extensions force R-isomorphic R-rngs
  const auto& mc = minimal_corpus();
  for (std::size_t a = 0; a < mc.size(); ++a)
    for (std::size_t b = a + 1; b < mc.size(); ++b) {
      const auto ma = catalog_rrng(mc[a]), mb = catalog_rrng(mc[b]);
      if (!same_base(*ma, *mb) || ma->order() != mb->order()) continue;
      Task t;
      t.id = mc[a] + " ~ " + mc[b];
      t.order = extension_order(*ma);
      t.run = [ma, mb, caps](Probe& p) {
        const auto xa = ideal_extension(*ma, caps), xb = ideal_extension(*mb, caps);
        const bool ext_iso = find_r_isomorphism(xa.base_embedding, xb.base_embedding).has_value();
        const bool iso = r_isomorphic(*ma, *mb, caps);
        p.detail(std::string("E iso ") + (ext_iso ? "yes" : "no") + ", I iso " + (iso ? "yes" : "no"));
        p.expect(ext_iso == iso, "E(R,I) ~ E(R,I') iff I ~ I'");
      };
      s.tasks.push_back(std::move(t));
    }
  return s;
}

inline Suite idealdescription(const Caps& caps) {
  Suite s;
  std::vector<std::string> specs;
  for (const auto& spec : minimal_corpus())
    if (!catalog_rrng(spec)->zero_product()) specs.push_back(spec);
  for_rrngs(s, specs, [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const auto ideals = enumerate_ideals(*x.ring, caps);
    const auto families = describe_ideal_families(x, caps);
    std::set<ElementSet> described;
    for (const auto& f : families) described.insert(f.second);
    p.detail(std::to_string(ideals.size()) + " ideals");
    p.expect(described.size() == families.size(), "the three families do not overlap");
    p.expect(described == std::set<ElementSet>(ideals.begin(), ideals.end()), "the families are exactly the ideals",
             std::to_string(described.size()) + " described vs " + std::to_string(ideals.size()));
    const auto records = classify_ideals(x, caps);
    p.expect(records.size() == ideals.size(), "every ideal gets one record");
    const auto ann = annihilators(m).two_sided;
    bool any3 = false;
    for (const auto& rec : records)
      if (rec.kind == IdealKind::type3) {
        any3 = true;
        p.expect(rec.z.subset_of(ann), "type 3: Z inside ann_R(I)", rec.members.str());
        p.expect(std::any_of(rec.phi.begin(), rec.phi.end(), [](Index v) { return v != 0; }), "type 3: phi nonzero");
      } else if (rec.kind == IdealKind::type1) {
        p.expect(rec.a.subset_of(ann), "type 1: A inside ann_R(I)", rec.members.str());
      }
    p.expect(any3 == hom_to_quotient_nonzero(m, caps), "type 3 nonempty iff Hom_R(I, R/ann_R(I)) != 0");
  });
  return s;
}

inline Suite semiprimeoversemiprime(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const bool e = is_semiprime(*x.ring), r = is_semiprime(m.base());
    p.detail(std::string("E ") + (e ? "semiprime" : "not semiprime") + ", R " + (r ? "semiprime" : "not semiprime") +
             (m.zero_product() ? ", I^2 = 0" : ", I^2 != 0"));
    p.tally(r ? "R semiprime" : "R not semiprime");
    p.tally(m.zero_product() ? "I^2 = 0" : "I^2 != 0");
    p.expect(e == (r && !m.zero_product()), "E semiprime iff R semiprime and I^2 != 0");
  });
  s.aggregate = [](const std::vector<Probe>& all, Probe& p) {
    std::map<std::string, long> t;
    for (const auto& q : all)
      for (const auto& [k, v] : q.tallies()) t[k] += v;
    for (const char* k : {"R semiprime", "R not semiprime", "I^2 = 0", "I^2 != 0"})
      p.expect(t[k] > 0, std::string("corpus covers ") + k);
  };
  return s;
}

inline Suite primeidealext(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const bool prime = is_prime(*x.ring);
    const auto e_ann = annihilators_in_extension(x);
    const bool b = e_ann.right.is_zero() && e_ann.left.is_zero();
    const bool c = !m.zero_product() && annihilators(m).two_sided.is_zero() && !hom_to_base_nonzero(m, caps);
    p.detail(std::string("E ") + (prime ? "prime" : "not prime"));
    p.expect(prime == b, "E prime iff ann(I_E) = ann(_E I) = 0");
    p.expect(prime == c, "E prime iff I^2 != 0, ann_R(I) = 0 and Hom_R(I,R) = 0");
    if (prime) p.expect(is_prime(m.base()), "E prime implies R prime");
  });
  return s;
}

inline Suite annideals(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    std::vector<Index> members;
    for (auto a : annihilators(m).two_sided) members.push_back(x.pair(a, 0));
    const auto a = ElementSet::from_unsorted(std::move(members));
    p.expect(is_ideal(*x.ring, a), "ann_R(I) + 0 is an ideal of E");
    const bool sq = !m.zero_product();
    p.expect(is_semiprime_ideal(*x.ring, a) == sq, "ann_R(I) + 0 semiprime iff I^2 != 0");
    p.expect(is_prime_ideal(*x.ring, a) == (sq && !hom_to_quotient_nonzero(m, caps)),
             "ann_R(I) + 0 prime iff I^2 != 0 and Hom_R(I, R/ann_R(I)) = 0");
  });
  return s;
}

inline Suite thethreetypes(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const auto type = rrng_type(m, caps);
    const auto ann = annihilators_in_extension(x).two_sided;
    const auto base = x.base_embedding.image();
    p.detail(rrng_type_name(type) + std::string(", ann_E(I) = ") + ann.str());
    p.expect((type == RrngType::T1) == x.ideal.subset_of(ann), "T1 iff ann_E(I) contains I");
    p.expect((type == RrngType::T2) == ann.subset_of(base), "T2 iff ann_E(I) inside R");
    p.expect((type == RrngType::T3) == (intersect(ann, x.ideal).is_zero() && !ann.subset_of(base)),
             "T3 iff ann_E(I) meets I trivially and leaves R");
  });
  return s;
}

inline Suite subdirectprime(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto ann = annihilators(m).two_sided;
    const bool hom = hom_to_quotient_nonzero(m, caps);
    const Quotient q = quotient_ring(m.base(), ann);
    const auto little = little_ideal(*q.ring, caps);
    bool second = is_prime(*q.ring) && little.has_value();
    if (second) {
      const auto as_rrng = induced_rrng(quotient_rrng(m.base_ptr(), ann), *little).rrng;
      second = r_isomorphic(m, as_rrng, caps);
    }
    p.detail(std::string("Hom_R(I, R/ann) ") + (hom ? "!= 0" : "= 0"));
    p.expect(hom == second, "Hom_R(I, R/ann) != 0 iff R/ann is s.i. prime with little ideal R-isomorphic to I");
  });
  // a prime ring with a minimal ideal has a little ideal
  for (const char* spec : {"gf(2)", "gf(4)", "gf(9)", "zmod(5)", "mat(2,2)", "mat(2,3)"}) {
    Task t;
    t.id = spec;
    const auto r = catalog_ring(spec);
    t.order = r->order();
    t.run = [r, caps](Probe& p) {
      p.expect(is_prime(*r), "ring is prime");
      p.expect(little_ideal(*r, caps).has_value(), "prime ring with a minimal ideal is subdirectly irreducible");
    };
    s.tasks.push_back(std::move(t));
  }
  return s;
}

inline Suite centralstuff(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto x = ideal_extension(m, caps);
    const auto c = centralizer_in(m);
    const bool central = is_central_extension(x.base_embedding, caps);
    p.detail(std::string(central ? "central" : "not central") + ", C_I(R) = " + c.str());
    p.expect(central == !c.is_zero(), "E central iff C_I(R) != 0");
    const auto z = center(*x.ring, caps);
    for (auto i : c) p.expect(z.contains(x.pair(0, i)), "C_I(R) inside Z(E)", std::to_string(i));
  });
  return s;
}

inline Suite brauer(const Caps& caps) {
  Suite s;
  const std::vector<std::string> rings = {
      "gf(2)",          "gf(4)",        "zmod(4)",           "zmod(6)",      "mat(2,2)", "product(gf(2),gf(2))",
      "tri(2,2)",       "tri(3,2)",     "product(gf(2),gf(3))", "product(gf(2),mat(2,2))",
  };
  auto add = [&](const std::string& id, std::shared_ptr<const FiniteRing> r) {
    Task t;
    t.id = id;
    t.order = r->order();
    t.run = [r, caps](Probe& p) {
      std::size_t n = 0, holding = 0;
      const auto ideals = enumerate_ideals(*r, caps);
      for (const auto& i : ideals) {
        if (i.is_zero()) continue;
        bool minimal = true;
        for (const auto& j : ideals) minimal = minimal && (j.is_zero() || !j.subset_of(i) || j == i);
        if (!minimal) continue;
        bool square_zero = true;
        for (auto a : i)
          for (auto b : i) square_zero = square_zero && r->mul(a, b) == 0;
        if (square_zero) continue;
        const auto rep = brauer_report(*r, i, caps);
        ++n;
        const bool all = rep.meets_center && rep.has_central_idempotent && rep.direct_summand;
        const bool none = !rep.meets_center && !rep.has_central_idempotent && !rep.direct_summand;
        p.expect(all || none, "the three conditions agree", i.str());
        if (all) {
          ++holding;
          const Index e = *rep.idempotent;
          p.expect(i.contains(e) && r->mul(e, e) == e && center(*r, caps).contains(e), "witness is a central idempotent in I");
        }
      }
      p.detail(std::to_string(n) + " minimal ideals with nonzero square, " + std::to_string(holding) + " satisfying");
    };
    s.tasks.push_back(std::move(t));
  };
  for (const auto& spec : rings) add(spec, catalog_ring(spec));
  for (const char* spec : {"ideal_extension(regular(mat(2,2)))", "ideal_extension(quotient_rrng(zmod(4),2))",
                           "ideal_extension(twisted_field(4,1))"})
    add(spec, catalog_embedding(spec)->big);
  return s;
}

inline Suite primecenter(const Caps& caps) {
  Suite s;
  std::vector<std::pair<std::string, std::shared_ptr<const FiniteRing>>> rings;
  for (const char* spec : {"gf(2)", "gf(4)", "gf(8)", "zmod(7)", "mat(2,2)", "mat(2,3)", "mat(3,2)"})
    rings.emplace_back(spec, catalog_ring(spec));
  for (const auto& spec : minimal_corpus()) {
    const auto m = catalog_rrng(spec);
    const Quotient q = quotient_ring(m->base(), annihilators(*m).two_sided);
    if (is_prime(*q.ring)) rings.emplace_back(spec + " R/ann", q.ring);
  }
  for (auto& [id, r] : rings) {
    Task t;
    t.id = id;
    t.order = r->order();
    t.run = [r = r, caps](Probe& p) {
      p.expect(is_prime(*r), "ring is prime");
      const auto little = little_ideal(*r, caps);
      if (!p.expect(little.has_value(), "ring is subdirectly irreducible")) return;
      const bool meets = !intersect(*little, center(*r, caps)).is_zero();
      p.expect(meets == is_simple(*r, caps), "little ideal meets the center iff the ring is simple");
    };
    s.tasks.push_back(std::move(t));
  }
  return s;
}

inline Suite maincentral(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const FiniteRing& r = m.base();
    const auto ann = annihilators(m).two_sided;
    const auto quotient = quotient_rrng(m.base_ptr(), ann);
    const auto x = ideal_extension(m, caps);
    const bool c1 = r_isomorphic(m, quotient, caps);
    const bool c2 = find_unity(m.rng()).has_value();
    const bool c3 = has_nonzero_central_idempotent(m.rng());
    const bool c4 = has_nonzero_rhom(regular_rrng(m.base_ptr()), m, true, caps);
    const bool c5 = has_nonzero_rhom(m, quotient, true, caps) && is_maximal_ideal(r, ann, enumerate_ideals(r, caps));
    const bool c6 = is_central_extension(x.base_embedding, caps) && !m.zero_product();
    std::string bits;
    for (bool b : {c1, c2, c3, c4, c5, c6}) bits += b ? '1' : '0';
    p.detail("conditions " + bits);
    p.expect(bits == "111111" || bits == "000000", "the six conditions agree", bits);
  });
  return s;
}

inline Suite centralchar(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto ann = annihilators(m).two_sided;
    const auto x = ideal_extension(m, caps);
    const bool central = is_central_extension(x.base_embedding, caps);
    const bool bimod = bimodule_isomorphic(m, quotient_rrng(m.base_ptr(), ann, true), caps);
    p.detail(central ? "central" : "not central");
    p.expect(central == bimod, "E central iff I ~ R/ann_R(I) as bimodules");
    if (central) p.expect(is_maximal_ideal(m.base(), ann, enumerate_ideals(m.base(), caps)), "central implies ann_R(I) maximal");
  });
  // extensions whose centrality is known in advance
  const std::vector<std::pair<std::string, bool>> known = {
      {"trivial_extension(twisted_field(4,1))", false},
      {"regular_embed(4,2)", false},
      {"embed(gf(2),gf(4))", true},
      {"diagonal(gf(2))", true},
      {"ideal_extension(ideal_as_rrng(gf(2),1))", true},
      {"trivial_extension(zero_bimodule(gf(2),0))", true},
  };
  for (const auto& [spec, expected] : known) {
    Task t;
    t.id = spec;
    const auto e = catalog_embedding(spec);
    t.order = e->big->order();
    t.run = [e, expected = expected, caps](Probe& p) {
      const bool central = is_central_extension(*e, caps);
      p.detail(central ? "central" : "not central");
      p.expect(central == expected, expected ? "reported central" : "reported non-central");
    };
    s.tasks.push_back(std::move(t));
  }
  return s;
}

inline std::vector<std::string> central_candidates() {
  auto v = extension_corpus();
  for (const auto& m : nonminimal_corpus()) v.push_back("ideal_extension(" + m + ")");
  v.push_back("embed(gf(2),mat(2,2))");
  v.push_back("embed(gf(2),tri(2,2))");
  v.push_back("embed(gf(2),product(gf(2),gf(2),gf(2)))");
  return v;
}

inline Suite semiprimeovercentral(const Caps& caps) {
  Suite s;
  for_embeddings(s, central_candidates(), [caps](const EmbeddedSubring& e, Probe& p) {
    const bool central = is_central_extension(e, caps);
    p.detail(central ? "central" : "not central");
    p.tally(central ? "central" : "not central");
    if (!central) return;
    if (is_prime(*e.big)) p.expect(is_prime(*e.small), "S prime implies R prime");
    if (is_semiprime(*e.big)) p.expect(is_semiprime(*e.small), "S semiprime implies R semiprime");
  });
  s.aggregate = [](const std::vector<Probe>& all, Probe& p) {
    long central = 0;
    for (const auto& q : all)
      if (auto it = q.tallies().find("central"); it != q.tallies().end()) central += it->second;
    p.detail(std::to_string(central) + " central extensions");
    p.expect(central > 0, "the corpus contains central extensions");
  };
  return s;
}

inline Suite partialreduction(const Caps& caps) {
  Suite s;
  auto specs = extension_corpus();
  for (const auto& m : nonminimal_corpus()) specs.push_back("ideal_extension(" + m + ")");
  for_embeddings(s, specs, [caps](const EmbeddedSubring& e, Probe& p) {
    const FiniteRing& big = *e.big;
    const FiniteRing& small = *e.small;
    if (!is_maximal_subring(e, caps)) {
      p.detail("not a minimal extension");
      return;
    }
    const auto nil_s = prime_radical(big, caps);
    const auto image = e.image();
    if (nil_s.subset_of(image)) {
      p.detail("Nil(S) inside R");
      return;
    }
    p.tally("applies");
    const auto nil_r = prime_radical(small, caps);
    std::vector<Index> pre;
    for (std::size_t r = 0; r < small.order(); ++r)
      if (nil_s.contains(e.map[r])) pre.push_back(static_cast<Index>(r));
    const auto contraction = ElementSet::from_unsorted(std::move(pre));
    p.detail("Nil(R) = " + nil_r.str() + ", Nil(S) = " + nil_s.str());
    p.expect(nil_r == contraction, "Nil(R) = Nil(S) cap R", contraction.str());

    // s = r + t with t in Nil(S) determines r modulo Nil(R)
    const Quotient qr = quotient_ring(small, nil_r);
    std::vector<Index> pi(big.order(), npos);
    bool well_defined = true;
    for (std::size_t r = 0; r < small.order(); ++r)
      for (auto t : nil_s) {
        const Index sv = big.add(e.map[r], t);
        const Index v = qr.project[r];
        if (pi[sv] != npos && pi[sv] != v) well_defined = false;
        pi[sv] = v;
      }
    const bool covers = std::none_of(pi.begin(), pi.end(), [](Index v) { return v == npos; });
    p.expect(covers, "R + Nil(S) = S");
    p.expect(well_defined, "the surjection S -> R/Nil(R) is well defined");
    if (!covers || !well_defined) return;
    p.expect(is_rng_hom(big, *qr.ring, pi) && pi[big.one()] == qr.ring->one(), "S -> R/Nil(R) is a ring homomorphism");
    std::vector<Index> kernel;
    for (std::size_t x = 0; x < big.order(); ++x)
      if (pi[x] == 0) kernel.push_back(static_cast<Index>(x));
    p.expect(ElementSet::from_unsorted(std::move(kernel)) == nil_s, "its kernel is Nil(S)");
    const Quotient qs = quotient_ring(big, nil_s);
    std::vector<Index> induced(qs.ring->order());
    for (std::size_t y = 0; y < induced.size(); ++y) induced[y] = pi[qs.representative[y]];
    p.expect(qs.ring->order() == qr.ring->order() && is_rng_hom(*qs.ring, *qr.ring, induced) &&
                 injective_table(induced, qr.ring->order()),
             "S/Nil(S) ~ R/Nil(R) through the surjection");
  });
  s.aggregate = [](const std::vector<Probe>& all, Probe& p) {
    bool nilpotent_case = false;
    long n = 0;
    for (const auto& q : all)
      if (q.tallies().count("applies")) {
        ++n;
        nilpotent_case = nilpotent_case || q.id() == "ideal_extension(zero_bimodule(gf(2),0))";
      }
    p.detail(std::to_string(n) + " pairs with Nil(S) outside R");
    p.expect(nilpotent_case, "F_2 in F_2[x]/(x^2) is among them");
  };
  return s;
}

/// Classification with its independent side checks; shared by the
/// classification suites.
inline void check_classification(const EmbeddedSubring& e, Probe& p, const Caps& caps) {
  const auto t = classify_minimal_extension(e, caps);
  const FiniteRing& big = *e.big;
  const bool prime = prime_by_ideals(big, caps), semiprime = semiprime_by_ideals(big, caps);
  p.tally(tag_name(t.tag));
  p.detail(std::string("type ") + tag_name(t.tag));
  p.expect(prime == is_prime(big) && semiprime == is_semiprime(big), "elementwise and ideal-based primality agree");
  switch (t.tag) {
    case ExtTag::P:
    case ExtTag::PI: p.expect(prime, "P and PI extensions are prime"); break;
    case ExtTag::SR:
    case ExtTag::SI: p.expect(semiprime && !prime, "SR and SI extensions are semiprime, not prime"); break;
    case ExtTag::N: p.expect(!semiprime, "N extensions are not semiprime"); break;
  }
  if (t.tag == ExtTag::P) {
    const auto image = e.image();
    for (const auto& j : enumerate_ideals(big, caps))
      if (!j.is_zero()) p.expect(!intersect(j, image).is_zero(), "P: every nonzero ideal meets R", j.str());
  }
  if (t.tag == ExtTag::SI) p.expect(is_prime_ideal(*e.small, *t.prime_ideal), "SI: ann_R(I) is prime");
  if (t.tag == ExtTag::PI) {
    // a PI extension of a simple ring has a unique proper nonzero ideal
    p.tally("PI instances");
    if (is_simple(*e.small, caps)) p.expect(enumerate_ideals(big, caps).size() == 3, "PI: unique proper nonzero ideal");
  }

  // the same extension on relabeled elements
  const auto shuffled = shuffled_presentation(e, 0xC0FFEE);
  const auto u = classify_minimal_extension(shuffled, caps);
  p.expect(u.tag == t.tag, "relabeling keeps the type");
  if (t.witness && u.witness) {
    p.expect(r_isomorphic(*t.witness, *u.witness, caps), "relabeling keeps the witness up to R-isomorphism");
    if (t.prime_ideal) p.expect(u.prime_ideal && *t.prime_ideal == *u.prime_ideal, "relabeling keeps P");
  }
}

inline Suite primeext(const Caps& caps) {
  Suite s;
  std::vector<std::string> prime_base, other;
  for (const auto& spec : extension_corpus())
    (is_prime(*catalog_embedding(spec)->small) ? prime_base : other).push_back(spec);
  for_embeddings(s, prime_base, [caps](const EmbeddedSubring& e, Probe& p) { check_classification(e, p, caps); });
  for_embeddings(s, other, [caps](const EmbeddedSubring& e, Probe& p) {
    try {
      classify_minimal_extension(e, caps);
      p.expect(false, "non-prime base is rejected");
    } catch (const Error& err) {
      p.detail(errc_name(err.code()));
      p.expect(err.code() == Errc::not_prime_base, "non-prime base is rejected with not-prime-base");
    }
  });
  {
    Task t;
    t.id = "embed(gf(2),mat(2,2))";
    const auto e = catalog_embedding(t.id);
    t.order = e->big->order();
    t.run = [e, caps](Probe& p) {
      try {
        classify_minimal_extension(*e, caps);
        p.expect(false, "a non-minimal extension is rejected");
      } catch (const Error& err) {
        p.detail(errc_name(err.code()));
        p.expect(err.code() == Errc::not_minimal_extension, "a non-minimal extension is rejected");
      }
    };
    s.tasks.push_back(std::move(t));
  }
  s.aggregate = [](const std::vector<Probe>& all, Probe& p) {
    std::map<std::string, long> t;
    for (const auto& q : all)
      for (const auto& [k, v] : q.tallies()) t[k] += v;
    std::string census;
    for (const char* k : {"P", "PI", "SR", "SI", "N"}) census += std::string(census.empty() ? "" : " ") + k + "=" + std::to_string(t[k]);
    p.detail("census " + census);
    p.expect(t["P"] > 0 && t["SI"] > 0 && t["N"] > 0, "P, SI and N occur", census);
    p.expect(t["PI"] == 0, "no PI extension of a finite prime ring", census);
    p.expect(t["SR"] == 0, "no SR extension of a finite prime ring", census);
  };
  return s;
}

inline Suite simplechar(const Caps& caps) {
  Suite s;
  std::vector<std::string> specs;
  for (const auto& spec : extension_corpus())
    if (is_simple(*catalog_embedding(spec)->small, caps)) specs.push_back(spec);
  for_embeddings(s, specs, [caps](const EmbeddedSubring& e, Probe& p) {
    const auto t = classify_minimal_extension(e, caps);
    p.detail(std::string("type ") + tag_name(t.tag));
    p.tally(tag_name(t.tag));
    p.expect(t.tag != ExtTag::SR, "a simple base has no SR extensions");
    const bool central = is_central_extension(e, caps);
    switch (t.tag) {
      case ExtTag::P: p.expect(is_simple(*e.big, caps), "P: the extension is simple"); break;
      case ExtTag::PI:
        p.expect(!central, "PI: never central");
        p.expect(enumerate_ideals(*e.big, caps).size() == 3, "PI: unique proper nonzero ideal");
        p.expect(!r_isomorphic(*t.witness, regular_rrng(e.small), caps), "PI: I not R-isomorphic to R");
        break;
      case ExtTag::N: {
        const bool iso = bimodule_isomorphic(*t.witness, regular_rrng(e.small), caps);
        p.expect(iso == central, "N: M ~ R as bimodules iff central");
        p.expect(is_minimal_rrng(*t.witness, caps), "N: M is a simple bimodule");
        break;
      }
      default: break;
    }
    if (t.tag == ExtTag::SI) {
      p.expect(central, "SI: always central");
      // R x R with R diagonal
      auto product = detail::product_ring({e.small, e.small});
      std::vector<Index> images;
      for (std::size_t i = 0; i < e.small->rank(); ++i)
        images.push_back(static_cast<Index>(e.small->basis(i) * e.small->order() + e.small->basis(i)));
      const auto diag = make_embedding(product, e.small, images);
      p.expect(find_r_isomorphism(e, diag).has_value(), "SI: R-isomorphic to R x R");
    }
  });
  return s;
}

inline Suite succinctcentral(const Caps& caps) {
  Suite s;
  std::vector<std::string> specs;
  for (const auto& spec : extension_corpus()) {
    const auto e = catalog_embedding(spec);
    if (is_prime(*e->small) && is_central_extension(*e, caps)) specs.push_back(spec);
  }
  for_embeddings(s, specs, [caps](const EmbeddedSubring& e, Probe& p) {
    const auto c = classify_central(e, caps);
    p.detail(std::string("type ") + tag_name(c.tag) + (c.maximal_ideal ? ", M = " + c.maximal_ideal->str() : ""));
    p.tally(tag_name(c.tag));
    p.expect(c.tag == ExtTag::P || c.tag == ExtTag::SI || c.tag == ExtTag::N, "central: one of P, SI, N");
    if (c.tag == ExtTag::P) return;
    const FiniteRing& r = *e.small;
    p.expect(is_maximal_ideal(r, *c.maximal_ideal, enumerate_ideals(r, caps)), "M is maximal");
    const auto again = classify_central(shuffled_presentation(e, 0xBEEF), caps);
    p.expect(again.tag == c.tag && again.maximal_ideal == c.maximal_ideal, "M is determined by the extension");
    p.expect(find_r_isomorphism(e, *c.model).has_value(), "R-isomorphic to the model ring");
  });
  // non-central input is refused
  {
    Task t;
    t.id = "trivial_extension(twisted_field(4,1))";
    const auto e = catalog_embedding(t.id);
    t.order = e->big->order();
    t.run = [e, caps](Probe& p) {
      try {
        classify_central(*e, caps);
        p.expect(false, "non-central extension is refused");
      } catch (const Error& err) {
        p.detail(errc_name(err.code()));
        p.expect(err.code() == Errc::not_central, "non-central extension is refused with not-central");
      }
    };
    s.tasks.push_back(std::move(t));
  }
  return s;
}

inline Suite no_finite_t2(const Caps& caps) {
  Suite s;
  for_rrngs(s, minimal_corpus(), [caps](const RRng& m, Probe& p) {
    const auto t = rrng_type(m, caps);
    p.detail(rrng_type_name(t));
    p.tally(rrng_type_name(t));
    p.expect(t != RrngType::T2, "no T2 minimal R-rng over a finite ring");
  });
  s.aggregate = [](const std::vector<Probe>& all, Probe& p) {
    std::map<std::string, long> t;
    for (const auto& q : all)
      for (const auto& [k, v] : q.tallies()) t[k] += v;
    p.detail("T1=" + std::to_string(t["T1"]) + " T2=" + std::to_string(t["T2"]) + " T3=" + std::to_string(t["T3"]));
    p.expect(t["T2"] == 0, "zero T2 instances");
  };
  return s;
}

/// A raw order-4 table as a FiniteRing over F_2 on the basis (2, 1).
inline EmbeddedSubring order4_ring(const brute::Table4& t) {
  const CarrierGroup g({2, 2});
  std::vector<Index> sc = {t.mul[2][2], t.mul[2][1], t.mul[1][2], t.mul[1][1]};
  auto big = std::make_shared<const FiniteRing>(FiniteRng(g, std::move(sc)), t.one);
  return make_embedding(big, catalog_ring("gf(2)"), {t.one});
}

inline Suite order4_census(const Caps& caps) {
  Suite s;
  Task t;
  t.id = "order 4, characteristic 2";
  t.order = 4;
  t.run = [caps](Probe& p) {
    const auto classes = brute::order4_char2_rings();
    p.detail(std::to_string(classes.size()) + " classes");
    if (!p.expect(classes.size() == 3, "exactly 3 isomorphism classes", std::to_string(classes.size()))) return;
    const std::vector<std::pair<std::string, ExtTag>> models = {
        {"embed(gf(2),gf(4))", ExtTag::P},
        {"diagonal(gf(2))", ExtTag::SI},
        {"trivial_extension(zero_bimodule(gf(2),0))", ExtTag::N},
    };
    std::set<std::string> matched;
    for (const auto& c : classes) {
      const auto e = order4_ring(c);
      p.expect(is_maximal_subring(e, caps), "each class is a minimal extension of F_2");
      const auto prof = brute::profile(c);
      for (const auto& [spec, tag] : models) {
        if (!find_r_isomorphism(e, *catalog_embedding(spec))) continue;
        matched.insert(spec);
        p.expect(classify_minimal_extension(e, caps).tag == tag, "class has the expected type", spec);
        if (tag == ExtTag::P) p.expect(prof.field, "F_4 is a field");
        if (tag == ExtTag::SI) p.expect(prof.idempotents == 4 && prof.nilpotents == 0, "F_2 x F_2 has 4 idempotents");
        if (tag == ExtTag::N) p.expect(prof.nilpotents == 1, "F_2[x]/(x^2) has one nonzero nilpotent");
      }
    }
    p.expect(matched.size() == 3, "the classes are F_4, F_2 x F_2 and F_2[x]/(x^2)");
  };
  s.tasks.push_back(std::move(t));
  return s;
}

inline Suite finiteindex_witness(const Caps& caps) {
  Suite s;
  for_embeddings(s, {"regular_embed(4,2)", "regular_embed(9,3)", "regular_embed(8,2)"},
                 [caps](const EmbeddedSubring& e, Probe& p) {
                   const FiniteRing& big = *e.big;
                   p.expect(is_maximal_subring(e, caps), "k is a maximal subring of End_F(k)");
                   p.expect(is_prime(big), "End_F(k) is prime");
                   p.expect(!big.commutative(), "End_F(k) is noncommutative");
                   bool zero_divisor = false;
                   for (std::size_t a = 1; a < big.order() && !zero_divisor; ++a)
                     for (std::size_t b = 1; b < big.order() && !zero_divisor; ++b)
                       zero_divisor = big.mul(static_cast<Index>(a), static_cast<Index>(b)) == 0;
                   p.expect(zero_divisor, "End_F(k) is not a division ring");
                   p.expect(centralizer(big, e.image(), caps) == e.image(), "C(k) = k");
                 });
  return s;
}

inline Suite bergman_levels(const Caps&) {
  Suite s;
  for (const char* spec : {"bergman_level(1,2)", "bergman_level(2,2)", "bergman_level(1,3)"}) {
    Task t;
    t.id = spec;
    const auto obj = catalog_make(spec);
    const auto level = std::get<std::shared_ptr<const BergmanLevel>>(obj);
    t.order = 0;
    t.run = [level](Probe& p) {
      const auto v = bergman_violations(*level);
      p.detail(std::to_string(v.size()) + " violations");
      p.expect(v.empty(), "all level identities hold", v.empty() ? "" : v.front());
    };
    s.tasks.push_back(std::move(t));
  }
  return s;
}

inline Suite hom_oracle(const Caps& caps) {
  Suite s;
  std::vector<std::string> pool = all_rrngs();
  std::vector<std::shared_ptr<const RRng>> rr;
  std::vector<std::string> names;
  for (const auto& spec : pool) {
    const auto m = catalog_rrng(spec);
    if (m->order() > 16) continue;
    rr.push_back(m);
    names.push_back(spec);
  }
  // also R itself and R/ann as targets
  const std::size_t base_count = rr.size();
  for (std::size_t a = 0; a < base_count; ++a) {
    const auto& m = rr[a];
    auto reg = std::make_shared<const RRng>(regular_rrng(m->base_ptr()));
    if (reg->order() <= 16) {
      rr.push_back(reg);
      names.push_back("R of " + names[a]);
    }
    auto quo = std::make_shared<const RRng>(quotient_rrng(m->base_ptr(), annihilators(*m).two_sided));
    if (quo->order() <= 16) {
      rr.push_back(quo);
      names.push_back("R/ann of " + names[a]);
    }
  }
  for (std::size_t a = 0; a < base_count; ++a)
    for (std::size_t b = 0; b < rr.size(); ++b) {
      if (!same_base(*rr[a], *rr[b])) continue;
      Task t;
      t.id = names[a] + " -> " + names[b];
      t.order = rr[a]->order() * rr[b]->order();
      t.run = [src = rr[a], dst = rr[b], caps](Probe& p) {
        std::string counts;
        for (bool mult : {true, false}) {
          HomOptions o;
          o.multiplicative = mult;
          std::set<std::vector<Index>> engine;
          for (const auto& h : enumerate_rhoms(*src, *dst, o, caps)) engine.insert(h.values);
          const auto oracle = brute::rhoms(*src, *dst, mult);
          p.expect(engine == oracle, mult ? "R-homs agree with the brute-force scan" : "bimodule homs agree with the brute-force scan",
                   std::to_string(engine.size()) + " vs " + std::to_string(oracle.size()));
          counts += (counts.empty() ? "" : ", ") + std::to_string(engine.size()) + (mult ? " homs" : " bimodule homs");
        }
        p.detail(counts);
      };
      s.tasks.push_back(std::move(t));
    }
  return s;
}

using Builder = Suite (*)(const Caps&);

inline const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r = {
      {"minimalann", minimalann},
      {"produce", produce},
      {"posers", posers},
      {"suffiso", suffiso},
      {"idealcancel", idealcancel},
      {"idealdescription", idealdescription},
      {"semiprimeoversemiprime", semiprimeoversemiprime},
      {"primeidealext", primeidealext},
      {"annideals", annideals},
      {"thethreetypes", thethreetypes},
      {"subdirectprime", subdirectprime},
      {"centralstuff", centralstuff},
      {"brauer", brauer},
      {"primecenter", primecenter},
      {"maincentral", maincentral},
      {"centralchar", centralchar},
      {"semiprimeovercentral", semiprimeovercentral},
      {"partialreduction", partialreduction},
      {"primeext", primeext},
      {"simplechar", simplechar},
      {"succinctcentral", succinctcentral},
      {"no-finite-T2", no_finite_t2},
      {"order4-census", order4_census},
      {"finiteindex-witness", finiteindex_witness},
      {"bergman-levels", bergman_levels},
      {"hom-oracle", hom_oracle},
  };
  return r;
}

}  // namespace suites

inline std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : suites::registry()) ids.push_back(id);
  return ids;
}

inline VerificationReport run_suite(const std::string& id, const SuiteOptions& opts = {}) {
  const auto& reg = suites::registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == id; });
  if (it == reg.end()) throw Error(Errc::unknown_suite, "no suite named '" + id + "'");
  const suites::Suite suite = it->second(opts.caps);

  std::vector<const suites::Task*> tasks;
  std::size_t skipped = 0;
  for (const auto& t : suite.tasks) {
    if (t.order > opts.max_order) ++skipped;
    else tasks.push_back(&t);
  }

  std::vector<Probe> probes;
  for (const auto* t : tasks) probes.emplace_back(t->id);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        tasks[k]->run(probes[k]);
      } catch (const std::exception& e) {
        probes[k].expect(false, "unexpected exception", e.what());
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (suite.aggregate) {
    Probe agg("aggregate");
    try {
      suite.aggregate(probes, agg);
    } catch (const std::exception& e) {
      agg.expect(false, "unexpected exception", e.what());
    }
    probes.push_back(std::move(agg));
  }

  VerificationReport rep;
  rep.suite_id = id;
  for (const auto& p : probes) {
    ++rep.instances;
    if (p.failed()) rep.failures.push_back(p.failure());
    else ++rep.passes;
    rep.lines.push_back(std::string(p.failed() ? "FAIL " : "ok   ") + p.id() +
                        (p.detail_text().empty() ? "" : ": " + p.detail_text()));
    for (const auto& n : p.notes()) rep.notes.push_back(p.id() + ": " + n);
  }
  if (skipped) rep.notes.push_back(std::to_string(skipped) + " instance(s) above --max-order skipped");
  return rep;
}

}  // namespace minext
