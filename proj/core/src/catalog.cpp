#include "arq/catalog.hpp"

#include "arq/matrix.hpp"

#include <array>
#include <charconv>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>

namespace arq {

namespace {

QVector qv(std::initializer_list<int> v) {
  QVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t v = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument(std::string("catalog: ") + what + ": expected a positive integer, got '" + s + "'");
  return v;
}

bool proportional(const QVector& a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

Arrangement remark13() {
  static const int M[4][20] = {
      {3, 3, 3, 3, 3, 9, 7, 5, 7, 2, 0, 0, 6, 3, 4, 8, 6, 2, 9, 5},
      {8, 1, 7, 1, 2, 8, 2, 6, 1, 8, 5, 9, 2, 8, 3, 0, 1, 0, 8, 9},
      {1, 9, 1, 9, 5, 2, 5, 9, 3, 7, 7, 3, 6, 6, 4, 0, 9, 1, 5, 9},
      {1, 0, 1, 4, 1, 1, 7, 2, 4, 1, 3, 9, 2, 8, 0, 8, 7, 1, 2, 3}};
  std::vector<QVector> cols;
  for (int j = 0; j < 20; ++j) {
    QVector v;
    for (int i = 0; i < 4; ++i) v.emplace_back(M[i][j]);
    cols.push_back(std::move(v));
  }
  return Arrangement(cols);
}

Arrangement x2() {
  return Arrangement({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}), qv({0, 1, -1}),
                      qv({1, 0, -1}), qv({1, 1, 0}), qv({1, 1, -2})});
}

Arrangement bracelet() {
  return Arrangement({qv({1, 0, 0, 0}), qv({0, 1, 0, 0}), qv({0, 0, 1, 0}),
                      qv({1, 0, 0, 1}), qv({0, 1, 0, 1}), qv({0, 0, 1, 1}),
                      qv({1, 1, 0, 1}), qv({1, 0, 1, 1}), qv({0, 1, 1, 1})});
}

// The nine planes with slope parameter t; proportional duplicates (which
// appear at t = 0 and t = 1) are dropped, keeping first occurrences.
Arrangement er(const Rational& t) {
  std::vector<QVector> cand = {qv({1, -1, 0}), qv({1, 0, -1}), qv({0, 1, -1}),
                               qv({1, 0, 0}),  qv({0, 1, 0}),  qv({0, 0, 1})};
  cand.push_back({Rational(1), -t, Rational(0)});
  cand.push_back({Rational(1), Rational(0), -t});
  cand.push_back({Rational(0), Rational(1), -t});
  std::vector<QVector> kept;
  for (const QVector& v : cand) {
    bool dup = false;
    for (const QVector& k : kept) dup = dup || proportional(v, k);
    if (!dup) kept.push_back(v);
  }
  return Arrangement(kept);
}

Arrangement type_d(std::size_t n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("catalog: typeD(n) requires 2 <= n <= 8");
  std::vector<QVector> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {-1, 1}) {
        QVector v(n, Rational(0));
        v[i] = 1;
        v[j] = s;
        normals.push_back(std::move(v));
      }
  return Arrangement(normals);
}

Arrangement primegap6() {
  std::vector<QVector> normals;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      QVector v(6, Rational(0));
      v[i] = 1;
      v[j] = -1;
      normals.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      const std::size_t gap = j - i;
      if (gap != 2 && gap != 3 && gap != 5) continue;
      QVector v(6, Rational(0));
      v[i] = 1;
      v[j] = 1;
      normals.push_back(std::move(v));
    }
  return Arrangement(normals);
}

Arrangement boolean_arr(std::size_t n) {
  if (n < 1 || n > 62)
    throw std::invalid_argument("catalog: boolean(n) requires 1 <= n <= 62");
  std::vector<QVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    QVector v(n, Rational(0));
    v[i] = 1;
    normals.push_back(std::move(v));
  }
  return Arrangement(normals);
}

Arrangement braid(std::size_t n) {
  if (n < 2 || n > 11)
    throw std::invalid_argument("catalog: braid(n) requires 2 <= n <= 11");
  std::vector<QVector> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QVector v(n, Rational(0));
      v[i] = 1;
      v[j] = -1;
      normals.push_back(std::move(v));
    }
  return Arrangement(normals);
}

Arrangement graphic(const std::string& params) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t max_vertex = 0;
  std::size_t pos = 0;
  while (pos <= params.size()) {
    const auto comma = params.find(',', pos);
    const std::string tok = trim(params.substr(pos, comma == std::string::npos
                                                        ? std::string::npos
                                                        : comma - pos));
    const auto dash = tok.find('-');
    if (tok.empty() || dash == std::string::npos)
      throw std::invalid_argument("catalog: graphic: expected edges like 1-2,2-3, got '" + tok + "'");
    std::size_t u = parse_count(trim(tok.substr(0, dash)), "graphic edge");
    std::size_t v = parse_count(trim(tok.substr(dash + 1)), "graphic edge");
    if (u == v || u == 0 || v == 0)
      throw std::invalid_argument("catalog: graphic: bad edge '" + tok + "'");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("catalog: graphic: duplicate edge '" + tok + "'");
    edges.push_back({u, v});
    max_vertex = std::max(max_vertex, v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::vector<QVector> normals;
  for (const auto& [u, v] : edges) {
    QVector a(max_vertex, Rational(0));
    a[u - 1] = 1;
    a[v - 1] = -1;
    normals.push_back(std::move(a));
  }
  return Arrangement(normals);
}

using Point = std::pair<Rational, Rational>;

QVector line_through(const Point& p, const Point& q) {
  return {p.second - q.second, q.first - p.first,
          p.first * q.second - p.second * q.first};
}

// Do the six points lie on a common conic? Vanishing of the 6x6
// determinant in the conic coefficients is exactly that condition.
bool on_common_conic(const std::array<Point, 6>& pts) {
  QMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& [x, y] = pts[i];
    m[i] = {x * x, x * y, y * y, x, y, Rational(1)};
  }
  return determinant(m) == 0;
}

// Nine lines through six points: the hexagon edges and the three main
// diagonals, so that each point is a triple point. In the special
// realization the points lie on the unit circle; the general one moves
// the first point off it. The conic condition is re-verified on every
// construction.
Arrangement ziegler(const std::string& variant) {
  const bool special = variant == "special";
  if (!special && variant != "general")
    throw std::invalid_argument("catalog: ziegler expects (special) or (general)");
  std::array<Point, 6> pts = {
      Point{1, 0},
      {Rational(4) / 5, Rational(3) / 5},
      {0, 1},
      {Rational(-4) / 5, Rational(3) / 5},
      {Rational(-3) / 5, Rational(-4) / 5},
      {0, -1}};
  if (!special) pts[0] = {Rational(13) / 10, 0};
  if (on_common_conic(pts) != special)
    throw std::logic_error("catalog: ziegler conic validation failed");
  static const std::size_t pairs[9][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                          {5, 0}, {0, 3}, {1, 4}, {2, 5}};
  std::vector<QVector> normals;
  for (const auto& e : pairs) normals.push_back(line_through(pts[e[0]], pts[e[1]]));
  return Arrangement(normals);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"remark13", "", "20 planes in R^4, the columns of a fixed integer matrix"},
      {"x2", "", "seven planes in R^3 whose matroid is not chordal"},
      {"bracelet", "", "nine planes in R^4"},
      {"er", "t", "nine planes in R^3 with slope parameter t, duplicates removed"},
      {"d4", "", "the twelve planes x_i +- x_j in R^4"},
      {"primegap6", "", "x_i - x_j for i < j plus x_i + x_j when j - i is prime, in R^6"},
      {"boolean", "n", "the n coordinate planes in R^n"},
      {"braid", "n", "x_i - x_j for i < j in R^n"},
      {"typeD", "n", "x_i +- x_j for i < j in R^n"},
      {"graphic", "edges", "one plane x_u - x_v per edge u-v of a graph"},
      {"ziegler", "special|general",
       "nine lines with six triple points, on a common conic or not"},
  };
  return entries;
}

Arrangement catalog_get(const std::string& spec) {
  const std::string s = trim(spec);
  std::string name = s;
  std::string params;
  bool has_params = false;
  if (const auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')')
      throw std::invalid_argument("catalog: unbalanced parentheses in '" + spec + "'");
    name = trim(s.substr(0, open));
    params = trim(s.substr(open + 1, s.size() - open - 2));
    has_params = true;
  }

  const auto no_params = [&] {
    if (has_params && !params.empty())
      throw std::invalid_argument("catalog: '" + name + "' takes no parameters");
  };
  if (name == "remark13") return no_params(), remark13();
  if (name == "x2") return no_params(), x2();
  if (name == "bracelet") return no_params(), bracelet();
  if (name == "d4") return no_params(), type_d(4);
  if (name == "primegap6") return no_params(), primegap6();
  if (name == "er") return er(parse_rational(params));
  if (name == "boolean") return boolean_arr(parse_count(params, "boolean(n)"));
  if (name == "braid") return braid(parse_count(params, "braid(n)"));
  if (name == "typeD") return type_d(parse_count(params, "typeD(n)"));
  if (name == "graphic") return graphic(params);
  if (name == "ziegler") return ziegler(params);
  throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

}  // namespace arq
