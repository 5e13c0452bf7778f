#include "tardos/lp_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

namespace tardos {

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + msg),
      line(line_),
      column(column_) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Tokens per line, comments stripped; an optional `# name:` comment is
// captured separately.
struct Scanned {
  std::vector<std::vector<Token>> lines;
  std::string name;
};

Scanned scan(std::string_view text) {
  Scanned out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string_view comment = line.substr(hash + 1);
      if (out.name.empty() && comment.starts_with(" name: ")) {
        out.name = std::string(comment.substr(7));
        while (!out.name.empty() && (out.name.back() == ' ' || out.name.back() == '\r'))
          out.name.pop_back();
      }
      line = line.substr(0, hash);
    }
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    if (!toks.empty()) out.lines.push_back(std::move(toks));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

std::size_t parse_count(const Token& t) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError(t.line, t.column, "expected a nonnegative integer, got '" + t.text + "'");
  try {
    return static_cast<std::size_t>(std::stoull(t.text));
  } catch (const std::exception&) {
    throw ParseError(t.line, t.column, "count out of range: '" + t.text + "'");
  }
}

Rational parse_entry(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::invalid_argument&) {
    throw ParseError(t.line, t.column, "invalid rational literal '" + t.text + "'");
  }
}

RVector parse_tagged_vector(const std::vector<Token>& toks, const char* tag, std::size_t want) {
  if (toks[0].text != tag)
    throw ParseError(toks[0].line, toks[0].column,
                     "expected '" + std::string(tag) + "', got '" + toks[0].text + "'");
  if (toks.size() - 1 != want)
    throw DimensionMismatch("line " + std::to_string(toks[0].line) + ": '" + tag + "' carries " +
                            std::to_string(toks.size() - 1) + " entries, expected " +
                            std::to_string(want));
  RVector v;
  v.reserve(want);
  for (std::size_t i = 1; i < toks.size(); ++i) v.push_back(parse_entry(toks[i]));
  return v;
}

}  // namespace

LPInstance parse_instance(std::string_view text) {
  const Scanned sc = scan(text);
  if (sc.lines.empty()) throw ParseError(1, 1, "empty instance");
  const auto& header = sc.lines[0];
  if (header.size() != 2)
    throw ParseError(header[0].line, header[0].column, "header must be 'm n'");
  const std::size_t m = parse_count(header[0]);
  const std::size_t n = parse_count(header[1]);
  if (n == 0) throw ParseError(header[1].line, header[1].column, "n must be at least 1");
  if (sc.lines.size() != 3 + m) {
    const auto& t = sc.lines.back().front();
    throw DimensionMismatch("line " + std::to_string(t.line) + ": expected " +
                            std::to_string(3 + m) + " data lines, found " +
                            std::to_string(sc.lines.size()));
  }
  LPInstance p;
  p.name = sc.name;
  p.c = parse_tagged_vector(sc.lines[1], "c:", n);
  p.b = parse_tagged_vector(sc.lines[2], "b:", m);
  p.a = RMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = sc.lines[3 + i];
    if (row.size() != n)
      throw DimensionMismatch("line " + std::to_string(row[0].line) + ": row has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) p.a(i, j) = parse_entry(row[j]);
  }
  return p;
}

std::string serialize_instance(const LPInstance& p) {
  std::ostringstream out;
  if (!p.name.empty()) out << "# name: " << p.name << "\n";
  out << p.m() << " " << p.n() << "\n";
  out << "c:";
  for (const auto& v : p.c) out << " " << to_string(v);
  out << "\nb:";
  for (const auto& v : p.b) out << " " << to_string(v);
  out << "\n";
  for (std::size_t i = 0; i < p.m(); ++i) {
    for (std::size_t j = 0; j < p.n(); ++j) out << (j ? " " : "") << to_string(p.a(i, j));
    out << "\n";
  }
  return out.str();
}

namespace {

// Fraction-free Bareiss determinant over 128-bit intermediates; callers must
// ensure the Hadamard bound fits (checked in integer_det_safe).
std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 t =
            static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<std::int64_t>(t / prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool integer_det_safe(const RMatrix& m, double max_abs) {
  // Hadamard bound below 2^60 keeps every Bareiss intermediate in int64.
  const std::size_t n = m.rows();
  const double bound = std::pow(std::sqrt(static_cast<double>(n)) * std::max(max_abs, 1.0),
                                static_cast<double>(n));
  return bound < 1.15e18;
}

}  // namespace

TUReport is_totally_unimodular(const RMatrix& a, std::size_t max_order,
                               std::uint64_t det_budget) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  TUReport report;
  const std::size_t order_cap = std::min(max_order, std::min(m, n));

  bool integral = true;
  double max_abs = 0;
  for (std::size_t i = 0; i < m && integral; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(a(i, j))) {
        integral = false;
        break;
      }
      max_abs = std::max(max_abs, std::abs(a(i, j).convert_to<double>()));
    }
  const bool fast = integral && integer_det_safe(a, max_abs);

  std::uint64_t evaluated = 0;
  std::vector<std::size_t> rows_sel, cols_sel;
  std::vector<std::vector<std::int64_t>> scratch;

  const auto det_of = [&](std::size_t k) -> Rational {
    if (fast) {
      scratch.assign(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          scratch[i][j] = a(rows_sel[i], cols_sel[j]).convert_to<std::int64_t>();
      return make_rational(bareiss_det(scratch));
    }
    return determinant(a.select_rows(rows_sel).columns(cols_sel));
  };

  // Lexicographic k-combination walk; returns false when exhausted.
  const auto next_combination = [](std::vector<std::size_t>& sel, std::size_t limit) {
    const std::size_t k = sel.size();
    std::size_t i = k;
    while (i-- > 0) {
      if (sel[i] + (k - i) <= limit) {
        ++sel[i];
        for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  for (std::size_t k = 1; k <= order_cap; ++k) {
    rows_sel.resize(k);
    for (std::size_t i = 0; i < k; ++i) rows_sel[i] = i;
    do {
      cols_sel.resize(k);
      for (std::size_t j = 0; j < k; ++j) cols_sel[j] = j;
      do {
        if (++evaluated > det_budget)
          throw SizeLimitExceeded("subdeterminant budget exceeded at order " + std::to_string(k));
        const Rational d = det_of(k);
        if (d != 0 && d != 1 && d != -1) {
          report.is_tu = false;
          report.witness = TUWitness{rows_sel, cols_sel, d};
          report.max_order_checked = k;
          return report;
        }
      } while (next_combination(cols_sel, n - 1));
    } while (next_combination(rows_sel, m - 1));
  }

  report.is_tu = true;
  report.max_order_checked = order_cap;
  return report;
}

namespace {

std::int64_t rng_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

LPInstance gen_mincost_flow(const FlowGenParams& params) {
  const std::size_t nodes = params.nodes;
  const std::size_t arcs = params.arcs;
  if (nodes < 2) throw InvalidParameters("flow generator needs at least 2 nodes");
  if (arcs < nodes - 1)
    throw InvalidParameters("flow generator needs at least nodes-1 arcs to stay connected");
  if (params.cost_min > params.cost_max || params.supply_min > params.supply_max)
    throw InvalidParameters("empty cost or supply range");

  std::mt19937_64 g(params.seed);
  std::vector<std::pair<std::size_t, std::size_t>> arc_list;
  arc_list.reserve(arcs);
  // Random spanning tree first, random orientation per edge.
  for (std::size_t v = 1; v < nodes; ++v) {
    const std::size_t u = static_cast<std::size_t>(rng_int(g, 0, static_cast<std::int64_t>(v) - 1));
    if (rng_int(g, 0, 1))
      arc_list.emplace_back(u, v);
    else
      arc_list.emplace_back(v, u);
  }
  while (arc_list.size() < arcs) {
    const std::size_t u =
        static_cast<std::size_t>(rng_int(g, 0, static_cast<std::int64_t>(nodes) - 1));
    std::size_t v = static_cast<std::size_t>(rng_int(g, 0, static_cast<std::int64_t>(nodes) - 2));
    if (v >= u) ++v;  // no self-loops; parallel arcs are fine
    arc_list.emplace_back(u, v);
  }

  LPInstance p;
  p.c.reserve(arcs);
  for (std::size_t e = 0; e < arcs; ++e)
    p.c.push_back(make_rational(rng_int(g, params.cost_min, params.cost_max)));

  std::vector<std::int64_t> supply(nodes, 0);
  std::int64_t total = 0;
  for (std::size_t v = 0; v + 1 < nodes; ++v) {
    supply[v] = rng_int(g, params.supply_min, params.supply_max);
    total += supply[v];
  }
  supply[nodes - 1] = -total;  // supplies sum to zero; this row is dropped below

  p.a = RMatrix(nodes - 1, arcs);
  for (std::size_t e = 0; e < arcs; ++e) {
    const auto [tail, head] = arc_list[e];
    if (tail < nodes - 1) p.a(tail, e) += 1;
    if (head < nodes - 1) p.a(head, e) -= 1;
  }
  p.b.reserve(nodes - 1);
  for (std::size_t v = 0; v + 1 < nodes; ++v) p.b.push_back(make_rational(supply[v]));

  p.name = "flow-n" + std::to_string(nodes) + "-a" + std::to_string(arcs) + "-s" +
           std::to_string(params.seed);
  return p;
}

LPInstance gen_interval_matrix_lp(const IntervalGenParams& params) {
  if (params.rows < 1 || params.cols < 1) throw InvalidParameters("interval generator needs m, n >= 1");
  if (params.b_min > params.b_max || params.c_min > params.c_max)
    throw InvalidParameters("empty b or c range");

  std::mt19937_64 g(params.seed);
  LPInstance p;
  p.a = RMatrix(params.rows, params.cols);
  for (std::size_t i = 0; i < params.rows; ++i) {
    const std::size_t lo =
        static_cast<std::size_t>(rng_int(g, 0, static_cast<std::int64_t>(params.cols) - 1));
    const std::size_t hi = static_cast<std::size_t>(
        rng_int(g, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(params.cols) - 1));
    for (std::size_t j = lo; j <= hi; ++j) p.a(i, j) = 1;
  }
  p.b.reserve(params.rows);
  for (std::size_t i = 0; i < params.rows; ++i)
    p.b.push_back(make_rational(rng_int(g, params.b_min, params.b_max)));
  p.c.reserve(params.cols);
  for (std::size_t j = 0; j < params.cols; ++j)
    p.c.push_back(make_rational(rng_int(g, params.c_min, params.c_max)));

  p.name = "interval-m" + std::to_string(params.rows) + "-n" + std::to_string(params.cols) + "-s" +
           std::to_string(params.seed);
  return p;
}

}  // namespace tardos
