#include "psum/triangles.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "psum/rational.hpp"

namespace psum {

Family family_from_string(const std::string& s) {
  if (s == "R") return Family::R;
  if (s == "U") return Family::U;
  if (s == "u") return Family::LittleU;
  if (s == "Ps") return Family::Ps;
  if (s == "salie") return Family::Salie;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::U: return "U";
    case Family::LittleU: return "u";
    case Family::Ps: return "Ps";
    case Family::Salie: return "salie";
  }
  throw std::logic_error("unreachable family");
}

long family_first_row(Family f) {
  return (f == Family::R || f == Family::Ps) ? 0 : 1;
}

namespace {

// Ascending coefficients of the monic product (x - roots[0])...(x - roots.back()).
std::vector<Integer> monic_expand(const std::vector<Integer>& roots) {
  std::vector<Integer> c{Integer(1)};
  for (const auto& root : roots) {
    std::vector<Integer> next(c.size() + 1, Integer(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

Integer r_number(long k, long m) {
  if (k < 0 || m < 0 || m > k)
    throw std::domain_error("r_number: need 0 <= m <= k");
  Integer sum = 0;
  for (long j = 0; j <= m; ++j) {
    Integer term = binomial(Integer(2 * m), Integer(j)) *
                   int_pow(Integer(m - j), static_cast<unsigned long>(2 * k));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Integer u_central_second(long k, long m) {
  if (k < 1 || m < 1 || m > k)
    throw std::domain_error("u_central_second: need 1 <= m <= k");
  return div_exact(2 * r_number(k, m), factorial(static_cast<unsigned long>(2 * m)));
}

Integer u_central_first(long k, long m) {
  if (k < 1 || m < 1 || m > k)
    throw std::domain_error("u_central_first: need 1 <= m <= k");
  std::vector<Integer> roots;
  roots.reserve(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) roots.push_back(Integer(i) * Integer(i));
  return monic_expand(roots)[static_cast<size_t>(m)];
}

Integer legendre_stirling_first(long m, long r) {
  if (m < 0) throw std::domain_error("legendre_stirling_first: need m >= 0");
  if (r < 0 || r > m) return 0;
  if (m == 0) return 1;
  std::vector<Integer> roots;
  roots.reserve(static_cast<size_t>(m));
  for (long j = 0; j < m; ++j) roots.push_back(Integer(j) * Integer(j + 1));
  return monic_expand(roots)[static_cast<size_t>(r)];
}

Integer salie_number(long k, long r) {
  if (k < 1 || r < 1 || r > k)
    throw std::domain_error("salie_number: need 1 <= r <= k");
  Integer sum = 0;
  for (long m = r; m <= k; ++m)
    sum += u_central_second(k, m) * legendre_stirling_first(m, r);
  return sum;
}

namespace {

// Sums 1/(b_r)! * (1/(4^r (2r)!))^{b_r} over all admissible tails, descending
// from part size r with remaining weight w and remaining count c.
void partition_descend(long r, long w, long c, const Rational& partial,
                       Rational& total) {
  if (w == 0) {
    if (c == 0) total = total + partial;
    return;
  }
  if (r < 1 || w > r * c) return;
  Rational base(Integer(1),
                pow2(static_cast<unsigned long>(2 * r)) *
                    factorial(static_cast<unsigned long>(2 * r)));
  Rational factor(1);
  long limit = std::min(w / r, c);
  for (long b = 0; b <= limit; ++b) {
    if (b > 0) factor = factor * base / Rational(b);
    partition_descend(r - 1, w - r * b, c - b, partial * factor, total);
  }
}

}  // namespace

Integer r_via_partitions(long k, long m) {
  if (k < 1 || m < 1 || m > k)
    throw std::domain_error("r_via_partitions: need 1 <= m <= k");
  Rational total;
  partition_descend(k, k, m, Rational(1), total);
  Rational result = total *
                    Rational(pow2(static_cast<unsigned long>(2 * k + m - 1)) *
                             factorial(static_cast<unsigned long>(m)) *
                             factorial(static_cast<unsigned long>(2 * k)));
  if (!result.is_integer())
    throw std::logic_error("r_via_partitions: non-integral total " + result.str());
  return result.to_integer();
}

Integer r_diagonal(long k, long s) {
  if (s < 0 || s > 4)
    throw std::domain_error("r_diagonal: only s = 0..4 have closed forms");
  if (k < s + 1) throw std::domain_error("r_diagonal: need k >= s+1");
  Integer K(k);
  Integer poly;
  Integer denom;
  switch (s) {
    case 0:
      poly = 1;
      denom = 2;
      break;
    case 1:
      poly = K - 1;
      denom = 24;
      break;
    case 2:
      poly = (K - 2) * (5 * K - 11);
      denom = 2880;
      break;
    case 3:
      poly = (K - 3) * (35 * K * K - 231 * K + 382);
      denom = 725760;
      break;
    default:
      poly = (K - 4) * (175 * K * K * K - 2310 * K * K + 10181 * K - 14982);
      denom = 174182400;
      break;
  }
  return div_exact(poly * factorial(static_cast<unsigned long>(2 * k)), denom);
}

namespace {

std::vector<Integer> compute_row(Family f, long row) {
  std::vector<Integer> out;
  switch (f) {
    case Family::R:
      for (long m = 0; m <= row; ++m) out.push_back(r_number(row, m));
      break;
    case Family::U:
      for (long m = 1; m <= row; ++m) out.push_back(u_central_second(row, m));
      break;
    case Family::LittleU: {
      std::vector<Integer> roots;
      for (long i = 0; i < row; ++i) roots.push_back(Integer(i) * Integer(i));
      std::vector<Integer> coeffs = monic_expand(roots);
      out.assign(coeffs.begin() + 1, coeffs.end());
      break;
    }
    case Family::Ps:
      for (long r = 0; r <= row; ++r)
        out.push_back(legendre_stirling_first(row, r));
      break;
    case Family::Salie:
      for (long r = 1; r <= row; ++r) out.push_back(salie_number(row, r));
      break;
  }
  return out;
}

class TriangleStore {
 public:
  std::vector<Integer> row(Family f, long r) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& rows = rows_[f];
    long first = family_first_row(f);
    while (first + static_cast<long>(rows.size()) <= r)
      rows.push_back(compute_row(f, first + static_cast<long>(rows.size())));
    return rows[static_cast<size_t>(r - first)];
  }

 private:
  std::mutex mu_;
  std::map<Family, std::vector<std::vector<Integer>>> rows_;
};

TriangleStore& store() {
  static TriangleStore s;
  return s;
}

}  // namespace

std::vector<Integer> triangle_row(Family f, long row) {
  if (row < family_first_row(f))
    throw std::domain_error("triangle_row: row below first defined row");
  return store().row(f, row);
}

Triangle triangle_rows(Family f, long max_row) {
  long first = family_first_row(f);
  if (max_row < first)
    throw std::domain_error("triangle_rows: max_row below first defined row");
  Triangle t{f, first, {}};
  for (long r = first; r <= max_row; ++r) t.rows.push_back(triangle_row(f, r));
  return t;
}

std::string to_csv(const Triangle& t) {
  std::ostringstream os;
  os << "k,m,value\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    long row = t.first_row + static_cast<long>(i);
    for (size_t j = 0; j < t.rows[i].size(); ++j)
      os << row << ',' << t.first_row + static_cast<long>(j) << ','
         << t.rows[i][j] << '\n';
  }
  return os.str();
}

std::string to_json(const Triangle& t) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j > 0) os << ',';
      os << t.rows[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_bfile(const Triangle& t) {
  std::ostringstream os;
  long index = 1;
  for (const auto& row : t.rows)
    for (const auto& value : row) os << index++ << ' ' << value << '\n';
  return os.str();
}

std::string to_table(const Triangle& t) {
  std::string axis;
  switch (t.family) {
    case Family::R:
    case Family::U:
    case Family::LittleU: axis = "k\\m"; break;
    case Family::Ps: axis = "m\\r"; break;
    case Family::Salie: axis = "k\\r"; break;
  }
  size_t ncols = 0;
  for (const auto& row : t.rows) ncols = std::max(ncols, row.size());
  std::vector<size_t> width(ncols, 0);
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (size_t j = 0; j < row.size(); ++j) {
      line.push_back(to_string(row[j]));
      width[j] = std::max(width[j], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  size_t label_width = axis.size();
  for (size_t i = 0; i < t.rows.size(); ++i)
    label_width =
        std::max(label_width,
                 std::to_string(t.first_row + static_cast<long>(i)).size());
  for (size_t j = 0; j < ncols; ++j)
    width[j] = std::max(
        width[j], std::to_string(t.first_row + static_cast<long>(j)).size());
  std::ostringstream os;
  os << axis << std::string(label_width - axis.size(), ' ');
  for (size_t j = 0; j < ncols; ++j) {
    std::string head = std::to_string(t.first_row + static_cast<long>(j));
    os << "  " << std::string(width[j] - head.size(), ' ') << head;
  }
  os << '\n';
  for (size_t i = 0; i < cells.size(); ++i) {
    std::string label = std::to_string(t.first_row + static_cast<long>(i));
    os << label << std::string(label_width - label.size(), ' ');
    for (size_t j = 0; j < cells[i].size(); ++j)
      os << "  " << std::string(width[j] - cells[i][j].size(), ' ')
         << cells[i][j];
    os << '\n';
  }
  return os.str();
}

Triangle triangle_from_bfile(Family f, const std::string& text) {
  Triangle t{f, family_first_row(f), {}};
  std::istringstream is(text);
  std::string line;
  long expected_index = 1;
  std::vector<Integer> current;
  long current_row = t.first_row;
  auto row_length = [&](long row) { return row - t.first_row + 1; };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long index;
    std::string value;
    if (!(ls >> index >> value))
      throw std::invalid_argument("bfile: malformed line: " + line);
    if (index != expected_index)
      throw std::invalid_argument("bfile: index gap at line: " + line);
    ++expected_index;
    current.emplace_back(value);
    if (static_cast<long>(current.size()) == row_length(current_row)) {
      t.rows.push_back(std::move(current));
      current.clear();
      ++current_row;
    }
  }
  if (!current.empty())
    throw std::invalid_argument("bfile: truncated final row");
  return t;
}

}  // namespace psum
