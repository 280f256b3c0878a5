#include "togliatti/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "togliatti/errors.hpp"

namespace togliatti {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExponentVector::ExponentVector(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw InvalidArgument("negative exponent");
    degree_ += e;
  }
}

ExponentVector ExponentVector::pure_power(int num_vars, int index, int degree) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  e.at(static_cast<std::size_t>(index)) = degree;
  return ExponentVector(std::move(e));
}

bool ExponentVector::is_pure_power() const noexcept {
  return std::count(entries_.begin(), entries_.end(), 0) + 1 ==
         static_cast<std::ptrdiff_t>(entries_.size());
}

ExponentVector ExponentVector::permuted(std::span<const int> perm) const {
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out[static_cast<std::size_t>(perm[i])] = entries_[i];
  return ExponentVector(std::move(out));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("variable count mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return ExponentVector(std::move(out));
}

std::string to_string(const ExponentVector& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void enumerate_points(int remaining, std::size_t pos, std::vector<int>& cur,
                      std::vector<ExponentVector>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    enumerate_points(remaining - e, pos + 1, cur, out);
  }
}

void check_dims(int n, int d) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (d < 1) throw InvalidArgument("d must be >= 1");
}

void check_monomials(const std::vector<ExponentVector>& ms, int n, int d) {
  for (const auto& m : ms) {
    if (m.size() != static_cast<std::size_t>(n + 1))
      throw InvalidArgument("monomial " + to_string(m) + " has wrong length");
    if (m.degree() != d)
      throw InvalidArgument("monomial " + to_string(m) + " has wrong degree");
  }
  if (std::adjacent_find(ms.begin(), ms.end()) != ms.end())
    throw InvalidArgument("duplicate monomial");
}

std::vector<ExponentVector> complement(int n, int d,
                                       const std::vector<ExponentVector>& sorted) {
  std::vector<ExponentVector> all = lattice_points_simplex(n, d);
  std::vector<ExponentVector> out;
  out.reserve(all.size() - std::min(all.size(), sorted.size()));
  std::set_difference(all.begin(), all.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<ExponentVector> lattice_points_simplex(int n, int d) {
  check_dims(n, d);
  std::vector<ExponentVector> out;
  out.reserve(static_cast<std::size_t>(binomial(n + d, d)));
  std::vector<int> cur(static_cast<std::size_t>(n + 1), 0);
  enumerate_points(d, 0, cur, out);
  return out;
}

MonomialSystem MonomialSystem::from_generators(
    int n, int d, std::vector<ExponentVector> generators) {
  check_dims(n, d);
  std::sort(generators.begin(), generators.end());
  check_monomials(generators, n, d);
  auto apolar = complement(n, d, generators);
  return MonomialSystem(n, d, std::move(generators), std::move(apolar));
}

MonomialSystem MonomialSystem::from_apolar(int n, int d,
                                           std::vector<ExponentVector> apolar) {
  check_dims(n, d);
  std::sort(apolar.begin(), apolar.end());
  check_monomials(apolar, n, d);
  auto generators = complement(n, d, apolar);
  return MonomialSystem(n, d, std::move(generators), std::move(apolar));
}

MonomialSystem MonomialSystem::from_side(SystemSide side, int n, int d,
                                         std::vector<ExponentVector> monomials) {
  return side == SystemSide::Generators
             ? from_generators(n, d, std::move(monomials))
             : from_apolar(n, d, std::move(monomials));
}

bool MonomialSystem::in_generators(const ExponentVector& m) const {
  return std::binary_search(generators_.begin(), generators_.end(), m);
}

bool MonomialSystem::in_apolar(const ExponentVector& m) const {
  return std::binary_search(apolar_.begin(), apolar_.end(), m);
}

bool MonomialSystem::is_artinian() const {
  for (int i = 0; i <= n_; ++i)
    if (!in_generators(ExponentVector::pure_power(n_ + 1, i, d_))) return false;
  return true;
}

MonomialSystem MonomialSystem::permuted(std::span<const int> perm) const {
  std::vector<ExponentVector> gens;
  gens.reserve(generators_.size());
  for (const auto& m : generators_) gens.push_back(m.permuted(perm));
  std::vector<ExponentVector> ap;
  ap.reserve(apolar_.size());
  for (const auto& m : apolar_) ap.push_back(m.permuted(perm));
  std::sort(gens.begin(), gens.end());
  std::sort(ap.begin(), ap.end());
  return MonomialSystem(n_, d_, std::move(gens), std::move(ap));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct RawToken {
  std::size_t line;
  std::string text;
  std::vector<int> exponents;  // indexed by variable; may be shorter than n+1
  bool is_tuple = false;
};

int parse_int(std::string_view s, std::size_t line, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() || v < 0)
    throw ParseError(line, "malformed " + std::string(what) + " in '" +
                               std::string(s) + "'");
  return v;
}

RawToken parse_factor_token(std::string_view tok, std::size_t line) {
  RawToken out{line, std::string(tok), {}, false};
  std::size_t start = 0;
  while (start <= tok.size()) {
    std::size_t star = tok.find('*', start);
    std::string_view f =
        tok.substr(start, star == std::string_view::npos ? star : star - start);
    if (f.size() < 2 || f[0] != 'x')
      throw ParseError(line, "malformed token '" + std::string(tok) + "'");
    std::size_t caret = f.find('^');
    int idx = parse_int(f.substr(1, caret == std::string_view::npos
                                        ? std::string_view::npos
                                        : caret - 1),
                        line, "variable index");
    int e = caret == std::string_view::npos
                ? 1
                : parse_int(f.substr(caret + 1), line, "exponent");
    if (e == 0) throw ParseError(line, "zero exponent in '" + std::string(tok) + "'");
    if (out.exponents.size() <= static_cast<std::size_t>(idx))
      out.exponents.resize(static_cast<std::size_t>(idx) + 1, 0);
    out.exponents[static_cast<std::size_t>(idx)] += e;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

RawToken parse_tuple_token(std::string_view tok, std::size_t line) {
  RawToken out{line, std::string(tok), {}, true};
  std::string_view body = tok.substr(1, tok.size() - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view f = body.substr(
        start, comma == std::string_view::npos ? comma : comma - start);
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front())))
      f.remove_prefix(1);
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back())))
      f.remove_suffix(1);
    out.exponents.push_back(parse_int(f, line, "tuple entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

MonomialSystem parse_system(std::string_view text, int n, int d) {
  std::optional<SystemSide> side;
  std::vector<RawToken> tokens;
  std::size_t line_no = 0;
  std::size_t header_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    };
    skip_ws();
    if (i + 1 < line.size() && (line[i] == 'S' || line[i] == 'P') &&
        line[i + 1] == ':') {
      if (side) throw ParseError(line_no, "second header line");
      side = line[i] == 'S' ? SystemSide::Generators : SystemSide::Apolar;
      header_line = line_no;
      i += 2;
    }
    for (skip_ws(); i < line.size(); skip_ws()) {
      if (!side) throw ParseError(line_no, "monomial before 'S:' or 'P:' header");
      std::size_t start = i;
      if (line[i] == '(') {
        std::size_t close = line.find(')', i);
        if (close == std::string_view::npos)
          throw ParseError(line_no, "unterminated tuple");
        i = close + 1;
        tokens.push_back(parse_tuple_token(line.substr(start, i - start), line_no));
      } else {
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        tokens.push_back(parse_factor_token(line.substr(start, i - start), line_no));
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (!side) throw ParseError(line_no, "missing 'S:' or 'P:' header");

  if (n < 0) {
    std::size_t vars = 0;
    for (const auto& t : tokens) vars = std::max(vars, t.exponents.size());
    if (vars < 2) throw ParseError(header_line, "cannot infer n; pass it explicitly");
    n = static_cast<int>(vars) - 1;
  }
  const auto num_vars = static_cast<std::size_t>(n + 1);

  std::vector<ExponentVector> monomials;
  monomials.reserve(tokens.size());
  for (auto& t : tokens) {
    if (t.is_tuple && t.exponents.size() != num_vars)
      throw ParseError(t.line, "tuple '" + t.text + "' has " +
                                   std::to_string(t.exponents.size()) +
                                   " entries, expected " + std::to_string(num_vars));
    if (t.exponents.size() > num_vars)
      throw ParseError(t.line, "variable index out of range in '" + t.text + "'");
    t.exponents.resize(num_vars, 0);
    ExponentVector m(std::move(t.exponents));
    if (m.degree() != d)
      throw ParseError(t.line, "'" + t.text + "' has degree " +
                                   std::to_string(m.degree()) + ", expected " +
                                   std::to_string(d));
    if (std::find(monomials.begin(), monomials.end(), m) != monomials.end())
      throw ParseError(t.line, "duplicate monomial '" + t.text + "'");
    monomials.push_back(std::move(m));
  }
  return MonomialSystem::from_side(*side, n, d, std::move(monomials));
}

std::string serialize(const MonomialSystem& sys, SystemSide side) {
  std::ostringstream out;
  out << "# n=" << sys.n() << " d=" << sys.d() << '\n';
  const auto& ms =
      side == SystemSide::Generators ? sys.generators() : sys.apolar();
  out << (side == SystemSide::Generators ? "S:" : "P:");
  for (const auto& m : ms) out << ' ' << to_string(m);
  out << '\n';
  return out.str();
}

MonomialSystem canonical_form(const MonomialSystem& sys) {
  std::vector<int> perm(static_cast<std::size_t>(sys.num_vars()));
  std::iota(perm.begin(), perm.end(), 0);
  MonomialSystem best = sys;
  std::vector<ExponentVector> image;
  image.reserve(sys.generators().size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    image.clear();
    for (const auto& m : sys.generators()) image.push_back(m.permuted(perm));
    std::sort(image.begin(), image.end());
    if (image < best.generators()) best = sys.permuted(perm);
  }
  return best;
}

}  // namespace togliatti
