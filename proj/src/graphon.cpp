#include "hgraphon/graphon.hpp"

#include "hgraphon/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hgraphon {

namespace {

// Line-oriented tokenizer: '#' starts a comment, blank lines are skipped,
// line numbers are tracked for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty content line as tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      tokens.clear();
      std::istringstream ss(raw);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

[[noreturn]] void fail(const LineReader& r, const std::string& cause) {
  throw ParseError(r.line(), cause);
}

std::vector<std::string> expect_line(LineReader& r, const std::string& what) {
  std::vector<std::string> tokens;
  if (!r.next(tokens)) throw ParseError(r.line() + 1, "unexpected end of file, expected " + what);
  return tokens;
}

Rat parse_value(LineReader& r, const std::string& tok) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    fail(r, e.what());
  }
}

long parse_count(LineReader& r, const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(r, std::string("malformed ") + what + " '" + tok + "'");
  }
}

}  // namespace

void validate_graphon(const StepGraphon& w) {
  const int q = w.q();
  if (q < 1) throw std::invalid_argument("graphon needs at least one block");
  if (w.values.cols() != q) throw std::invalid_argument("value matrix must be square");
  if (w.sigma.size() != q + 1) throw std::invalid_argument("sigma must have q+1 entries");
  if (w.sigma(0) != 0) throw std::invalid_argument("sigma must start at 0");
  if (w.sigma(q) != 1) throw std::invalid_argument("sigma must end at 1");
  for (int i = 0; i < q; ++i)
    if (!(w.sigma(i) < w.sigma(i + 1)))
      throw std::invalid_argument("sigma must be strictly increasing");
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      if (w.values(i, j) < 0 || w.values(i, j) > 1)
        throw std::invalid_argument("value out of range [0,1]");
      if (w.values(i, j) != w.values(j, i))
        throw std::invalid_argument("value matrix must be symmetric");
    }
}

StepGraphon make_graphon(RatVector sigma, RatMatrix values) {
  StepGraphon w{std::move(sigma), std::move(values)};
  validate_graphon(w);
  return w;
}

StepGraphon parse_graphon(std::istream& in) {
  LineReader r(in);

  auto header = expect_line(r, "'hgraphon v1' header");
  if (header.size() != 2 || header[0] != "hgraphon" || header[1] != "v1")
    fail(r, "expected header 'hgraphon v1'");

  auto qline = expect_line(r, "'q <count>'");
  if (qline.size() != 2 || qline[0] != "q") fail(r, "expected 'q <count>'");
  long q = parse_count(r, qline[1], "block count");
  if (q < 1) fail(r, "q must be at least 1");

  auto sline = expect_line(r, "'sigma <q+1 values>'");
  if (sline.empty() || sline[0] != "sigma") fail(r, "expected 'sigma <values>'");
  if (static_cast<long>(sline.size()) != q + 2)
    fail(r, "sigma needs exactly q+1 = " + std::to_string(q + 1) + " values");
  RatVector sigma(q + 1);
  for (long i = 0; i <= q; ++i) sigma(i) = parse_value(r, sline[i + 1]);
  if (sigma(0) != 0) fail(r, "sigma must start at 0");
  if (sigma(q) != 1) fail(r, "sigma must end at 1");
  for (long i = 0; i < q; ++i)
    if (!(sigma(i) < sigma(i + 1))) fail(r, "sigma must be strictly increasing");

  auto wline = expect_line(r, "'W'");
  if (wline.size() != 1 || wline[0] != "W") fail(r, "expected 'W'");

  RatMatrix values(q, q);
  for (long i = 0; i < q; ++i) {
    auto row = expect_line(r, "matrix row");
    if (static_cast<long>(row.size()) != q)
      fail(r, "matrix row needs exactly q = " + std::to_string(q) + " values");
    for (long j = 0; j < q; ++j) {
      Rat v = parse_value(r, row[j]);
      if (v < 0 || v > 1) fail(r, "value out of range [0,1]: " + row[j]);
      values(i, j) = v;
    }
  }
  for (long i = 0; i < q; ++i)
    for (long j = i + 1; j < q; ++j)
      if (values(i, j) != values(j, i)) fail(r, "value matrix must be symmetric");

  std::vector<std::string> extra;
  if (r.next(extra)) fail(r, "unexpected trailing content");

  return StepGraphon{std::move(sigma), std::move(values)};
}

StepGraphon parse_graphon_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_graphon(ss);
}

StepGraphon load_graphon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graphon file: " + path);
  return parse_graphon(in);
}

int block_of(const StepGraphon& w, const Rat& s) {
  const int q = w.q();
  if (s < 0 || s > 1) throw std::invalid_argument("coordinate outside [0,1]");
  if (s == 1) return q - 1;
  // Find i with sigma_i <= s < sigma_{i+1}.
  int lo = 0, hi = q - 1;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (w.sigma(mid) <= s)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Rat value_at(const StepGraphon& w, const Rat& s, const Rat& t) {
  return w.values(block_of(w, s), block_of(w, t));
}

Rat value_at(const StepGraphon& w, double s, double t) {
  return value_at(w, rational_from_double(s), rational_from_double(t));
}

SampledGraph sample_coordinates(const StepGraphon& w, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  SampledGraph g;
  g.n = n;
  g.q = w.q();
  g.coords.resize(n);
  g.blocks.resize(n);
  SplitMix64 rng(seed);
  for (int j = 0; j < n; ++j) {
    g.coords[j] = rng.next_unit();
    g.blocks[j] = block_of(w, rational_from_double(g.coords[j]));
  }
  return g;
}

SampledGraph sample(const StepGraphon& w, int n, std::uint64_t seed) {
  SampledGraph g = sample_coordinates(w, n, seed);

  // Resume the same stream where the coordinate phase left it.
  SplitMix64 rng(seed);
  for (int j = 0; j < n; ++j) rng.next_u64();

  const int q = w.q();
  Mat<double> prob(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) prob(i, j) = static_cast<double>(w.values(i, j));

  for (int i = 0; i + 1 < n; ++i) {
    const int bi = g.blocks[i];
    for (int j = i + 1; j < n; ++j) {
      const double u = rng.next_unit();
      if (u < prob(bi, g.blocks[j])) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

RatVector concentration(const StepGraphon& w) {
  const int q = w.q();
  RatVector x(q);
  for (int i = 0; i < q; ++i) x(i) = w.sigma(i + 1) - w.sigma(i);
  return x;
}

RatVector empirical_concentration(const SampledGraph& g) {
  RatVector x = RatVector::Zero(g.q);
  for (int b : g.blocks) {
    if (b < 0 || b >= g.q) throw std::invalid_argument("block index out of range");
    x(b) += 1;
  }
  for (int i = 0; i < g.q; ++i) x(i) /= g.n;
  return x;
}

StepGraphon refine_partition(const StepGraphon& w, int block, const Rat& t) {
  const int q = w.q();
  if (block < 0 || block >= q) throw std::invalid_argument("refine_partition: bad block index");
  if (!(w.sigma(block) < t && t < w.sigma(block + 1)))
    throw std::invalid_argument("refine_partition: breakpoint not inside the block");

  RatVector sigma(q + 2);
  for (int i = 0; i <= block; ++i) sigma(i) = w.sigma(i);
  sigma(block + 1) = t;
  for (int i = block + 1; i <= q; ++i) sigma(i + 1) = w.sigma(i);

  // Duplicate row and column `block`.
  auto src = [&](int i) { return i <= block ? i : i - 1; };
  RatMatrix values(q + 1, q + 1);
  for (int i = 0; i <= q; ++i)
    for (int j = 0; j <= q; ++j) values(i, j) = w.values(src(i), src(j));

  return StepGraphon{std::move(sigma), std::move(values)};
}

SampledGraph read_hgraph(std::istream& in) {
  LineReader r(in);

  auto header = expect_line(r, "'hgraph v1' header");
  if (header.size() != 2 || header[0] != "hgraph" || header[1] != "v1")
    fail(r, "expected header 'hgraph v1'");

  auto nline = expect_line(r, "'n <count>'");
  if (nline.size() != 2 || nline[0] != "n") fail(r, "expected 'n <count>'");
  long n = parse_count(r, nline[1], "node count");
  if (n < 1) fail(r, "n must be at least 1");

  auto qline = expect_line(r, "'q <count>'");
  if (qline.size() != 2 || qline[0] != "q") fail(r, "expected 'q <count>'");
  long q = parse_count(r, qline[1], "block count");
  if (q < 1) fail(r, "q must be at least 1");

  SampledGraph g;
  g.n = static_cast<int>(n);
  g.q = static_cast<int>(q);

  auto tokens = expect_line(r, "'blocks', 'coords' or 'edges'");

  // blocks is optional: decomposition checks do not need it.
  if (tokens[0] == "blocks") {
    if (static_cast<long>(tokens.size()) != n + 1)
      fail(r, "blocks needs exactly n = " + std::to_string(n) + " entries");
    g.blocks.resize(n);
    for (long j = 0; j < n; ++j) {
      long b = parse_count(r, tokens[j + 1], "block index");
      if (b < 1 || b > q) fail(r, "block index out of range 1.." + std::to_string(q));
      g.blocks[j] = static_cast<int>(b - 1);
    }
    tokens = expect_line(r, "'coords' or 'edges'");
  }

  if (tokens[0] == "coords") {
    if (static_cast<long>(tokens.size()) != n + 1)
      fail(r, "coords needs exactly n = " + std::to_string(n) + " entries");
    g.coords.resize(n);
    for (long j = 0; j < n; ++j) {
      try {
        size_t pos = 0;
        g.coords[j] = std::stod(tokens[j + 1], &pos);
        if (pos != tokens[j + 1].size()) throw std::invalid_argument(tokens[j + 1]);
      } catch (const std::exception&) {
        fail(r, "malformed coordinate '" + tokens[j + 1] + "'");
      }
      if (g.coords[j] < 0 || g.coords[j] >= 1) fail(r, "coordinate outside [0,1)");
    }
    tokens = expect_line(r, "'edges <m>'");
  }

  if (tokens.size() != 2 || tokens[0] != "edges") fail(r, "expected 'edges <count>'");
  long m = parse_count(r, tokens[1], "edge count");
  if (m < 0) fail(r, "edge count must be nonnegative");

  g.edges.reserve(m);
  for (long k = 0; k < m; ++k) {
    auto e = expect_line(r, "edge 'i j'");
    if (e.size() != 2) fail(r, "expected edge 'i j'");
    long i = parse_count(r, e[0], "node index");
    long j = parse_count(r, e[1], "node index");
    if (i < 1 || j < 1 || i > n || j > n) fail(r, "node index out of range 1.." + std::to_string(n));
    if (i >= j) fail(r, "edges must satisfy i < j (1-based)");
    g.edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  std::vector<std::string> extra;
  if (r.next(extra)) fail(r, "unexpected trailing content");

  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw ParseError(r.line(), "duplicate edge");
  return g;
}

SampledGraph load_hgraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_hgraph(in);
}

void write_hgraph(std::ostream& out, const SampledGraph& g) {
  out << "hgraph v1\n";
  out << "n " << g.n << "\n";
  out << "q " << g.q << "\n";
  if (!g.blocks.empty()) {
    out << "blocks";
    for (int b : g.blocks) out << ' ' << b + 1;
    out << "\n";
  }
  if (!g.coords.empty()) {
    out << "coords";
    char buf[32];
    for (double c : g.coords) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out << ' ' << buf;
    }
    out << "\n";
  }
  out << "edges " << g.edges.size() << "\n";
  for (auto [i, j] : g.edges) out << i + 1 << ' ' << j + 1 << "\n";
}

}  // namespace hgraphon
