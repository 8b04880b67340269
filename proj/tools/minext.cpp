// Command-line front end.  Exit codes: 0 success, 1 suite failure or a
// refused classification, 2 invalid input.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "minext/minext.hpp"

namespace {

using namespace minext;

bool is_catalog(const std::string& spec) { return spec.rfind("catalog:", 0) == 0; }

CatalogObject resolve(const std::string& spec) {
  if (is_catalog(spec)) return catalog_make(spec.substr(8));
  const Document doc = load_document(spec);
  if (!doc.rrngs.empty()) return doc.rrngs.front().rrng;
  if (!doc.rings.empty()) return doc.rings.back().ring;
  throw Error(Errc::parse_error, spec + ":0: empty: no ring or rrng defined");
}

std::shared_ptr<const FiniteRing> resolve_ring(const std::string& spec) {
  const auto obj = resolve(spec);
  if (auto e = std::get_if<std::shared_ptr<const EmbeddedSubring>>(&obj)) return (*e)->big;
  if (auto m = std::get_if<std::shared_ptr<const RRng>>(&obj)) return (*m)->base_ptr();
  return Catalog::as_ring(obj, spec);
}

std::shared_ptr<const RRng> resolve_rrng(const std::string& spec) { return Catalog::as_rrng(resolve(spec), spec); }

/// An extension from `--ext` alone (an embedding spec, or an R-rng giving
/// E(R,I)) or from a base ring and a containing ring.
std::shared_ptr<const EmbeddedSubring> resolve_extension(const std::string& base, const std::string& ext,
                                                         const Caps& caps) {
  const auto obj = resolve(ext);
  if (auto e = std::get_if<std::shared_ptr<const EmbeddedSubring>>(&obj)) return *e;
  if (auto m = std::get_if<std::shared_ptr<const RRng>>(&obj))
    return std::make_shared<const EmbeddedSubring>(ideal_extension(**m, caps).base_embedding);
  if (base.empty()) throw Error(Errc::bad_params, "--base is required when --ext names a ring");
  auto big = Catalog::as_ring(obj, ext);
  auto small = resolve_ring(base);
  auto emb = find_embedding(small, big);
  if (!emb) throw Error(Errc::bad_params, "no unital embedding of " + base + " into " + ext);
  return std::make_shared<const EmbeddedSubring>(std::move(*emb));
}

std::string strip_spaces(std::string s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

void print_classification(const EmbeddedSubring& e, bool central, const Caps& caps) {
  if (central) {
    const auto c = classify_central(e, caps);
    std::cout << "type " << tag_name(c.tag) << "\n";
    if (c.maximal_ideal) {
      std::cout << "maximal ideal M = " << c.maximal_ideal->str() << "\n";
      std::cout << "model " << (c.tag == ExtTag::SI ? "R x R/M" : "R with R/M adjoined") << ", order "
                << c.model->big->order() << "\n";
    }
    return;
  }
  const auto t = classify_minimal_extension(e, caps);
  std::cout << "type " << tag_name(t.tag) << "\n";
  if (!t.witness) {
    std::cout << "every nonzero ideal meets R\n";
    return;
  }
  const RRng& m = *t.witness;
  std::cout << "ideal J = " << t.ideal->str() << "\n";
  std::cout << "witness " << (t.tag == ExtTag::N ? "M" : "I") << ": order " << m.order() << ", carrier";
  for (auto d : m.rng().carrier().orders()) std::cout << " " << d;
  std::cout << (m.zero_product() ? ", square zero" : ", square nonzero") << "\n";
  std::cout << "ann_R = " << annihilators(m).two_sided.str() << "\n";
  if (t.prime_ideal) std::cout << "prime ideal P = " << t.prime_ideal->str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring extensions: construction, classification and verification"};
  app.require_subcommand(1);
  Caps caps;
  app.add_option("--closure-cap", caps.closure, "largest ring closed by worklist search")->capture_default_str();
  app.add_option("--enum-cap", caps.full, "largest ring enumerated element by element")->capture_default_str();

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "parse and validate a ring or rrng file");
  validate->add_option("file", validate_file)->required();

  std::string extend_rrng, extend_out;
  auto* extend = app.add_subcommand("extend", "emit E(R,I) as a ring file");
  extend->add_option("--rrng", extend_rrng, "R-rng: catalog:<spec> or file")->required();
  extend->add_option("--out", extend_out, "output file (default stdout)");

  std::string base_spec, ext_spec;
  bool central = false;
  auto* classify = app.add_subcommand("classify", "classify a minimal extension of a prime ring");
  classify->add_option("--base", base_spec, "base ring R");
  classify->add_option("--ext", ext_spec, "extension: a ring containing R, an embedding, or an R-rng")->required();
  classify->add_flag("--central", central, "central refinement: P, R x R/M or R with R/M adjoined");

  std::string ideals_spec, over_spec;
  auto* enumerate = app.add_subcommand("enumerate", "list ideals or subrings over R");
  auto* ideals_opt = enumerate->add_option("--ideals", ideals_spec, "ring");
  auto* over_opt = enumerate->add_option("--subrings-over", over_spec, "embedding or R-rng");
  ideals_opt->excludes(over_opt);
  enumerate->require_option(1);

  std::string suite_id;
  SuiteOptions sopts;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite_id, "suite id, or 'list'")->required();
  verify->add_option("--max-order", sopts.max_order, "skip instances with a larger ring")->capture_default_str();
  verify->add_option("--jobs", sopts.jobs, "worker threads")->capture_default_str();

  std::string emit_spec;
  auto* catalog = app.add_subcommand("catalog", "catalog constructors");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list constructors");
  auto* cat_emit = catalog->add_subcommand("emit", "print a catalog ring or R-rng as a file");
  cat_emit->add_option("spec", emit_spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sopts.caps = caps;
    if (*validate) {
      const Document doc = load_document(validate_file);
      if (doc.rings.empty() && doc.rrngs.empty())
        throw Error(Errc::parse_error, validate_file + ":0: empty: no ring or rrng defined");
      for (const auto& r : doc.rings)
        std::cout << "ok ring " << r.name << ": order " << r.ring->order() << ", rank " << r.ring->rank() << "\n";
      for (const auto& m : doc.rrngs) {
        std::cout << "ok rrng " << m.name << ": order " << m.rrng->order() << " over a ring of order "
                  << m.rrng->base().order() << (is_minimal_rrng(*m.rrng, caps) ? ", minimal" : ", not minimal") << "\n";
      }
      return 0;
    }
    if (*extend) {
      const auto m = resolve_rrng(extend_rrng);
      const auto x = ideal_extension(*m, caps);
      const std::string text = emit_ring(*x.ring, "E");
      if (extend_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(extend_out);
        if (!out) throw Error(Errc::parse_error, extend_out + ":0: io: cannot write file");
        out << text;
      }
      return 0;
    }
    if (*classify) {
      const auto e = resolve_extension(base_spec, ext_spec, caps);
      print_classification(*e, central, caps);
      return 0;
    }
    if (*enumerate) {
      if (*ideals_opt) {
        const auto r = resolve_ring(ideals_spec);
        const auto list = enumerate_ideals(*r, caps);
        for (const auto& i : list) std::cout << i.str() << "\n";
        std::cout << list.size() << " ideals\n";
      } else {
        const auto e = resolve_extension("", over_spec, caps);
        const auto list = subrings_containing(*e, caps);
        for (const auto& s : list) std::cout << s.str() << "\n";
        std::cout << list.size() << " subrings over R\n";
      }
      return 0;
    }
    if (*verify) {
      if (suite_id == "list") {
        for (const auto& id : suite_ids()) std::cout << id << "\n";
        return 0;
      }
      const auto rep = run_suite(suite_id, sopts);
      std::cout << rep.text();
      return rep.ok() ? 0 : 1;
    }
    if (*cat_list) {
      for (const auto& e : catalog_entries()) std::cout << e.signature << "  " << e.description << "\n";
      return 0;
    }
    if (*cat_emit) {
      const std::string spec = strip_spaces(is_catalog(emit_spec) ? emit_spec.substr(8) : emit_spec);
      const auto obj = catalog_make(spec);
      if (auto r = std::get_if<std::shared_ptr<const FiniteRing>>(&obj)) {
        std::cout << "# catalog:" << spec << "\n" << emit_ring(**r, "R");
      } else if (auto m = std::get_if<std::shared_ptr<const RRng>>(&obj)) {
        std::cout << "# catalog:" << spec << "\n" << emit_rrng(**m, "I", "R");
      } else if (auto e = std::get_if<std::shared_ptr<const EmbeddedSubring>>(&obj)) {
        std::cout << "# catalog:" << spec << "\n# R maps to basis images";
        for (auto v : (*e)->basis_images()) std::cout << " " << v;
        std::cout << " of S\n" << emit_ring(*(*e)->small, "R") << emit_ring(*(*e)->big, "S");
      } else {
        const auto& b = *std::get<std::shared_ptr<const BergmanLevel>>(obj);
        std::cout << "# catalog:" << spec << "\nE_" << b.n << " = " << b.idempotent.str() << "\n";
        const auto v = bergman_violations(b);
        std::cout << v.size() << " identity violations on basis pairs\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::not_prime_base:
      case Errc::not_minimal_extension:
      case Errc::not_central:
        std::cout << "refused: " << e.what() << "\n";
        return 1;
      case Errc::parse_error:
        std::cerr << e.message() << "\n";
        return 2;
      default:
        std::cerr << e.what() << "\n";
        return 2;
    }
  }
  return 0;
}
