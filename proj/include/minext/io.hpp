#pragma once

/**
 * @file io.hpp
 * @brief Text formats for rings and R-rngs.
 *
 *   ring <name>
 *   carrier d1 ... dk
 *   unity c1 ... ck
 *   mul i j = c1 ... ck        (all k*k pairs)
 *   end
 *
 *   rrng <name> over <ringref>
 *   carrier ...
 *   mul i j = ...
 *   lact i j = ...             (R-basis i times I-basis j)
 *   ract i j = ...             (I-basis i times R-basis j)
 *   end
 *
 * A ringref is the name of a ring defined earlier in the same file,
 * `catalog:<spec>`, or a path to a ring file (relative to the file).
 * `#` starts a comment.  Errors read `file:line: rule: message`.
 */

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minext/bimodule.hpp"
#include "minext/catalog.hpp"

namespace minext {

struct NamedRing {
  std::string name;
  std::shared_ptr<const FiniteRing> ring;
};

struct NamedRRng {
  std::string name;
  std::shared_ptr<const RRng> rrng;
};

struct Document {
  std::vector<NamedRing> rings;
  std::vector<NamedRRng> rrngs;
};

namespace detail {

class DocumentParser {
 public:
  DocumentParser(std::string file, std::filesystem::path dir) : file_(std::move(file)), dir_(std::move(dir)) {}

  Document parse(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ls(raw);
      std::vector<std::string> words;
      for (std::string w; ls >> w;) words.push_back(w);
      if (words.empty()) continue;
      record(words);
    }
    if (block_) fail(block_->start, "unterminated-block", "'" + block_->kind + " " + block_->name + "' has no 'end'");
    return std::move(doc_);
  }

 private:
  struct Table {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Coords, std::size_t>> entries;  // value, line
  };
  struct Block {
    std::string kind, name, over;
    std::size_t start = 0;
    std::optional<std::vector<std::uint32_t>> carrier;
    std::optional<Coords> unity;
    Table mul, lact, ract;
  };

  [[noreturn]] void fail(std::size_t line, const std::string& rule, const std::string& msg) const {
    throw Error(Errc::parse_error, file_ + ":" + std::to_string(line) + ": " + rule + ": " + msg);
  }

  std::uint64_t number(const std::string& w) const {
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos || w.size() > 9)
      fail(line_, "syntax", "expected a non-negative integer, got '" + w + "'");
    return std::stoull(w);
  }

  void record(const std::vector<std::string>& w) {
    const std::string& head = w[0];
    if (head == "ring" || head == "rrng") {
      if (block_) fail(line_, "nesting", "'" + head + "' inside '" + block_->kind + " " + block_->name + "'");
      Block b;
      b.kind = head;
      b.start = line_;
      if (head == "ring") {
        if (w.size() != 2) fail(line_, "syntax", "expected 'ring <name>'");
      } else {
        if (w.size() != 4 || w[2] != "over") fail(line_, "syntax", "expected 'rrng <name> over <ringref>'");
        b.over = w[3];
      }
      b.name = w[1];
      if (names_.count(b.name)) fail(line_, "duplicate-name", "'" + b.name + "' is already defined");
      block_ = std::move(b);
      if (head == "rrng") base_ = resolve(block_->over);
      return;
    }
    if (!block_) fail(line_, "syntax", "'" + head + "' outside a ring or rrng block");
    Block& b = *block_;
    if (head == "end") {
      if (w.size() != 1) fail(line_, "syntax", "'end' takes no arguments");
      finish();
      return;
    }
    if (head == "carrier") {
      if (b.carrier) fail(line_, "duplicate-record", "second 'carrier' record");
      std::vector<std::uint32_t> d;
      for (std::size_t i = 1; i < w.size(); ++i) {
        const auto v = number(w[i]);
        if (v < 2) fail(line_, "range", "cyclic orders must be at least 2");
        d.push_back(static_cast<std::uint32_t>(v));
      }
      if (d.empty()) fail(line_, "syntax", "'carrier' needs at least one order");
      if (d.size() > 16) fail(line_, "range", "at most 16 cyclic factors");
      b.carrier = std::move(d);
      return;
    }
    if (head == "unity") {
      if (b.kind != "ring") fail(line_, "unknown-record", "'unity' only belongs in a ring block");
      if (b.unity) fail(line_, "duplicate-record", "second 'unity' record");
      b.unity = coords(w, 1, *need_carrier(), "unity");
      return;
    }
    if (head == "mul" || head == "lact" || head == "ract") {
      if (head != "mul" && b.kind != "rrng") fail(line_, "unknown-record", "'" + head + "' only belongs in an rrng block");
      const auto& own = *need_carrier();
      if (w.size() < 4 || w[3] != "=") fail(line_, "syntax", "expected '" + head + " i j = c1 ... ck'");
      const std::size_t i = number(w[1]), j = number(w[2]);
      const std::size_t ki = head == "lact" ? base_rank() : own.size();
      const std::size_t kj = head == "ract" ? base_rank() : own.size();
      if (i >= ki || j >= kj)
        fail(line_, "range", head + " " + std::to_string(i) + " " + std::to_string(j) + " is outside " +
                                 std::to_string(ki) + " x " + std::to_string(kj));
      Table& t = head == "mul" ? b.mul : head == "lact" ? b.lact : b.ract;
      if (t.entries.count({i, j}))
        fail(line_, "duplicate-record", head + " " + std::to_string(i) + " " + std::to_string(j) + " given twice");
      t.entries[{i, j}] = {coords(w, 4, own, head), line_};
      return;
    }
    fail(line_, "unknown-record", "'" + head + "'");
  }

  const std::vector<std::uint32_t>* need_carrier() const {
    if (!block_->carrier) fail(line_, "order", "'carrier' must come before element records");
    return &*block_->carrier;
  }

  Coords coords(const std::vector<std::string>& w, std::size_t from, const std::vector<std::uint32_t>& d,
                const std::string& what) const {
    if (w.size() - from != d.size())
      fail(line_, "arity", what + " needs " + std::to_string(d.size()) + " coordinates, got " +
                               std::to_string(w.size() - from));
    Coords c;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const auto v = number(w[from + i]);
      if (v >= d[i]) fail(line_, "range", "coordinate " + std::to_string(v) + " is not below " + std::to_string(d[i]));
      c.push_back(static_cast<std::uint32_t>(v));
    }
    return c;
  }

  std::shared_ptr<const FiniteRing> resolve(const std::string& ref) {
    if (auto it = rings_.find(ref); it != rings_.end()) return it->second;
    try {
      if (ref.rfind("catalog:", 0) == 0) return catalog_ring(ref.substr(8));
      const std::filesystem::path p = std::filesystem::path(ref).is_absolute() ? std::filesystem::path(ref) : dir_ / ref;
      std::ifstream in(p);
      if (!in) fail(line_, "unresolved-ref", "no ring named '" + ref + "' and no such file");
      DocumentParser sub(p.string(), p.parent_path());
      auto d = sub.parse(in);
      if (d.rings.empty()) fail(line_, "unresolved-ref", "'" + ref + "' defines no ring");
      return d.rings.front().ring;
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error) throw;
      fail(line_, "unresolved-ref", e.what());
    }
  }

  std::size_t base_rank() {
    if (!base_) base_ = resolve(block_->over);
    return base_->rank();
  }

  std::vector<Index> table(const Table& t, std::size_t ki, std::size_t kj, const CarrierGroup& target,
                           const std::string& what) const {
    std::vector<Index> out(ki * kj);
    for (std::size_t i = 0; i < ki; ++i)
      for (std::size_t j = 0; j < kj; ++j) {
        auto it = t.entries.find({i, j});
        if (it == t.entries.end())
          fail(line_, "missing-record", "'" + what + " " + std::to_string(i) + " " + std::to_string(j) + "' is missing");
        out[i * kj + j] = target.index(it->second.first);
      }
    return out;
  }

  void finish() {
    Block b = std::move(*block_);
    if (!b.carrier) fail(line_, "missing-record", "'carrier' is missing");
    const CarrierGroup g(*b.carrier);
    const std::size_t k = g.rank();
    auto sc = table(b.mul, k, k, g, "mul");
    try {
      if (b.kind == "ring") {
        if (!b.unity) fail(line_, "missing-record", "'unity' is missing");
        auto r = std::make_shared<const FiniteRing>(FiniteRng(g, std::move(sc)), g.index(*b.unity));
        rings_[b.name] = r;
        doc_.rings.push_back({b.name, r});
      } else {
        if (!base_) base_ = resolve(b.over);
        const std::size_t kr = base_->rank();
        auto left = table(b.lact, kr, k, g, "lact");
        auto right = table(b.ract, k, kr, g, "ract");
        auto m = std::make_shared<const RRng>(make_rrng(base_, FiniteRng(g, std::move(sc)), std::move(left), std::move(right)));
        doc_.rrngs.push_back({b.name, m});
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error) throw;
      fail(b.start, errc_name(e.code()), e.what());
    }
    names_.insert(b.name);
    block_.reset();
    base_.reset();
  }

  std::string file_;
  std::filesystem::path dir_;
  std::size_t line_ = 0;
  std::optional<Block> block_;
  std::shared_ptr<const FiniteRing> base_;
  std::map<std::string, std::shared_ptr<const FiniteRing>> rings_;
  std::set<std::string> names_;
  Document doc_;
};

inline void emit_coords(std::ostream& os, const Coords& c) {
  for (auto v : c) os << " " << v;
}

inline void emit_carrier(std::ostream& os, const FiniteRng& s) {
  os << "carrier";
  for (auto d : s.carrier().orders()) os << " " << d;
  os << "\n";
}

}  // namespace detail

inline Document parse_document(std::istream& in, const std::string& file = "<input>",
                               const std::filesystem::path& dir = ".") {
  return detail::DocumentParser(file, dir).parse(in);
}

inline Document parse_document_text(const std::string& text, const std::string& file = "<input>") {
  std::istringstream in(text);
  return parse_document(in, file);
}

inline Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, path.string() + ":0: io: cannot open file");
  return parse_document(in, path.string(), path.parent_path());
}

inline std::string emit_ring(const FiniteRing& r, const std::string& name) {
  std::ostringstream os;
  os << "ring " << name << "\n";
  detail::emit_carrier(os, r);
  os << "unity";
  detail::emit_coords(os, r.coords(r.one()));
  os << "\n";
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j) {
      os << "mul " << i << " " << j << " =";
      detail::emit_coords(os, r.coords(r.basis_product(i, j)));
      os << "\n";
    }
  os << "end\n";
  return os.str();
}

/// The base ring goes first as its own block so the file stands alone.
inline std::string emit_rrng(const RRng& m, const std::string& name, const std::string& base_name = "R") {
  std::ostringstream os;
  const FiniteRing& r = m.base();
  const FiniteRng& i = m.rng();
  os << emit_ring(r, base_name) << "rrng " << name << " over " << base_name << "\n";
  detail::emit_carrier(os, i);
  for (std::size_t a = 0; a < i.rank(); ++a)
    for (std::size_t b = 0; b < i.rank(); ++b) {
      os << "mul " << a << " " << b << " =";
      detail::emit_coords(os, i.coords(i.basis_product(a, b)));
      os << "\n";
    }
  for (std::size_t a = 0; a < r.rank(); ++a)
    for (std::size_t b = 0; b < i.rank(); ++b) {
      os << "lact " << a << " " << b << " =";
      detail::emit_coords(os, i.coords(m.lact(r.basis(a), i.basis(b))));
      os << "\n";
    }
  for (std::size_t a = 0; a < i.rank(); ++a)
    for (std::size_t b = 0; b < r.rank(); ++b) {
      os << "ract " << a << " " << b << " =";
      detail::emit_coords(os, i.coords(m.ract(i.basis(a), r.basis(b))));
      os << "\n";
    }
  os << "end\n";
  return os.str();
}

}  // namespace minext
