#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace minext {

/// Square matrix over Z/p, row-major.  Used where the ambient ring is far
/// too large to enumerate and only bilinear identities on bases matter.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t n, std::uint32_t p) : n_(n), p_(p), a_(n * n, 0) {}

  static DenseMatrix identity(std::size_t n, std::uint32_t p) {
    DenseMatrix m(n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix unit(std::size_t n, std::uint32_t p, std::size_t i, std::size_t j) {
    DenseMatrix m(n, p);
    m(i, j) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix z(x.n_, x.p_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const std::uint64_t xik = x(i, k);
        if (!xik) continue;
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) = static_cast<std::uint32_t>((z(i, j) + xik * y(k, j)) % x.p_);
      }
    return z;
  }

  friend DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix z(x.n_, x.p_);
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = (x.a_[i] + y.a_[i]) % x.p_;
    return z;
  }

  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) = default;

  /// Kronecker product: each entry c of x becomes the block c*y.
  friend DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y) {
    const std::size_t n = x.n_ * y.n_;
    DenseMatrix z(n, x.p_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t j = 0; j < x.n_; ++j)
        for (std::size_t k = 0; k < y.n_; ++k)
          for (std::size_t l = 0; l < y.n_; ++l)
            z(i * y.n_ + k, j * y.n_ + l) = static_cast<std::uint32_t>((std::uint64_t{x(i, j)} * y(k, l)) % x.p_);
    return z;
  }

  bool is_zero() const {
    for (auto v : a_)
      if (v) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
      os << (i ? "; " : "[");
      for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t n_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

}  // namespace minext
