#include "qlmc/subspace.hpp"

#include <cctype>
#include <stdexcept>

namespace qlmc {

namespace {

void require_same_ambient(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace: ambient dimension mismatch");
}

// Kernel of the linear map given by `rows` (as a matrix acting on column
// vectors of length `width`), i.e. all v with rows . v = 0. The result rows
// are a basis of the kernel, not yet canonical.
RationalMatrix kernel_basis(RationalMatrix rows, std::size_t width) {
  const std::vector<std::size_t> pivots = rref(rows);
  std::vector<char> is_pivot(width, 0);
  for (const std::size_t p : pivots) is_pivot[p] = 1;

  RationalMatrix out;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(width, Rational(0));
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix t(cols, RationalVector(m.size(), Rational(0)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  RationalMatrix out(rows, RationalVector(cols, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Gauss-Jordan inverse; the Gram matrices fed in here are positive definite,
// so a zero pivot means a caller bug.
RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("matrix inverse: singular input");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<std::size_t> rref(RationalMatrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t width = rows[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    const Rational scale = rows[row][col];
    for (std::size_t j = col; j < width; ++j) rows[row][j] /= scale;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t j = col; j < width; ++j) rows[r][j] -= f * rows[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  rows.resize(row);  // drop zero rows
  return pivots;
}

RationalSubspace RationalSubspace::zero(std::size_t ambient) {
  return RationalSubspace(ambient, {});
}

RationalSubspace RationalSubspace::full(std::size_t ambient) {
  RationalMatrix rows(ambient, RationalVector(ambient, Rational(0)));
  for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = Rational(1);
  return RationalSubspace(ambient, std::move(rows));
}

RationalSubspace RationalSubspace::span(std::size_t ambient, RationalMatrix vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("span: vector length != ambient dim");
  rref(vectors);
  return RationalSubspace(ambient, std::move(vectors));
}

bool RationalSubspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: vector length != ambient dim");
  RationalVector residue = v;
  std::size_t col = 0;
  for (const auto& row : rows_) {
    while (col < ambient_ && row[col].is_zero()) ++col;  // pivot column of this row
    if (col == ambient_) break;
    if (!residue[col].is_zero()) {
      const Rational f = residue[col];
      for (std::size_t j = 0; j < ambient_; ++j) residue[j] -= f * row[j];
    }
    ++col;
  }
  for (const auto& x : residue)
    if (!x.is_zero()) return false;
  return true;
}

bool RationalSubspace::contains(const RationalSubspace& sub) const {
  if (sub.ambient_ != ambient_)
    throw std::invalid_argument("contains: ambient dimension mismatch");
  for (const auto& row : sub.rows_)
    if (!contains(row)) return false;
  return true;
}

std::string RationalSubspace::render() const {
  std::string out = "span[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ',';
    out += '(';
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (j > 0) out += ',';
      out += rows_[i][j].str();
    }
    out += ')';
  }
  out += ']';
  return out;
}

RationalSubspace complement(const RationalSubspace& a) {
  // v is orthogonal to the row space iff the basis matrix sends v to 0
  RationalMatrix rows = a.basis();
  RationalMatrix null_rows = kernel_basis(std::move(rows), a.ambient_dim());
  return RationalSubspace::span(a.ambient_dim(), std::move(null_rows));
}

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  require_same_ambient(a, b);
  RationalMatrix stacked = a.basis();
  for (const auto& row : b.basis()) stacked.push_back(row);
  return RationalSubspace::span(a.ambient_dim(), std::move(stacked));
}

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const std::size_t ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return RationalSubspace::zero(n);

  // Solve sum(lambda_i a_i) = sum(mu_j b_j): kernel of the n x (ra+rb)
  // system with columns [a_i | -b_j]; the lambda part spans A ^ B.
  RationalMatrix system(n, RationalVector(ra + rb, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ra; ++i) system[j][i] = a.basis()[i][j];
    for (std::size_t i = 0; i < rb; ++i) system[j][ra + i] = -b.basis()[i][j];
  }
  const RationalMatrix coeffs = kernel_basis(std::move(system), ra + rb);

  RationalMatrix vectors;
  for (const auto& u : coeffs) {
    RationalVector v(n, Rational(0));
    for (std::size_t i = 0; i < ra; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += u[i] * a.basis()[i][j];
    }
    vectors.push_back(std::move(v));
  }
  return RationalSubspace::span(n, std::move(vectors));
}

RationalSubspace intersect_via_complements(const RationalSubspace& a, const RationalSubspace& b) {
  require_same_ambient(a, b);
  return complement(sum(complement(a), complement(b)));
}

RationalSubspace project(const RationalSubspace& a, const RationalSubspace& onto) {
  require_same_ambient(a, onto);
  return intersect(sum(a, complement(onto)), onto);
}

RationalSubspace projection_oracle(const RationalSubspace& a, const RationalSubspace& onto) {
  require_same_ambient(a, onto);
  const std::size_t n = a.ambient_dim();
  if (onto.dim() == 0) return RationalSubspace::zero(n);

  // P = Bt (B Bt)^-1 B; the Gram matrix B Bt is positive definite because
  // the basis rows are independent.
  const RationalMatrix& b = onto.basis();
  const RationalMatrix bt = transpose(b, n);
  const RationalMatrix gram = multiply(b, bt);
  const RationalMatrix projector = multiply(multiply(bt, inverse(gram)), b);

  RationalMatrix images;
  for (const auto& v : a.basis()) {
    RationalVector image(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) image[j] += v[i] * projector[i][j];
    }
    images.push_back(std::move(image));
  }
  return RationalSubspace::span(n, std::move(images));
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  RationalSubspace parse(std::size_t ambient_hint) {
    skip_ws();
    expect_word("span");
    expect('[');
    RationalMatrix vectors;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      finish();
      if (ambient_hint == 0)
        throw std::invalid_argument("subspace literal: span[] needs an ambient dimension");
      return RationalSubspace::zero(ambient_hint);
    }
    while (true) {
      vectors.push_back(parse_vector());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    finish();
    const std::size_t ambient = vectors[0].size();
    for (const auto& v : vectors)
      if (v.size() != ambient)
        throw std::invalid_argument("subspace literal: vectors of unequal length");
    if (ambient_hint != 0 && ambient != ambient_hint)
      throw std::invalid_argument("subspace literal: ambient dimension mismatch");
    return RationalSubspace::span(ambient, std::move(vectors));
  }

 private:
  RationalVector parse_vector() {
    skip_ws();
    expect('(');
    RationalVector v;
    while (true) {
      v.push_back(parse_rational());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    return v;
  }

  Rational parse_rational() {
    const long long num = parse_integer();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const long long den = parse_integer();
      return Rational(num, den);
    }
    return Rational(num);
  }

  long long parse_integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw std::invalid_argument("subspace literal: expected a number at offset " +
                                  std::to_string(pos_));
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw std::invalid_argument(std::string("subspace literal: expected '") + c +
                                  "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w)
      throw std::invalid_argument("subspace literal: expected 'span'");
    pos_ += w.size();
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size())
      throw std::invalid_argument("subspace literal: trailing input at offset " +
                                  std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalSubspace parse_subspace(std::string_view text, std::size_t ambient) {
  return LiteralParser(text).parse(ambient);
}

}  // namespace qlmc
