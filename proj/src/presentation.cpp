#include "pgl/presentation.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

constexpr int kMaxGens = 7;

bool is_supported_prime(long long p) { return p == 2 || p == 3 || p == 5; }

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct LineScanner {
  std::string_view s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int col() const { return int(pos) + 1; }

  std::string_view token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }

  long long integer(const char* what) {
    skip_ws();
    int c = col();
    auto t = token();
    try {
      size_t used = 0;
      long long v = std::stoll(std::string(t), &used);
      if (used != t.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw SyntaxError(std::string("expected ") + what, line, c);
    }
  }
};

Word parse_word(LineScanner& sc, int p) {
  Word w;
  while (!sc.done()) {
    int c = sc.col();
    auto t = sc.token();
    auto colon = t.find(':');
    if (colon == std::string_view::npos)
      throw SyntaxError("expected <index>:<exponent> token", sc.line, c);
    long long gi = 0, ex = 0;
    try {
      size_t u1 = 0, u2 = 0;
      gi = std::stoll(std::string(t.substr(0, colon)), &u1);
      ex = std::stoll(std::string(t.substr(colon + 1)), &u2);
      if (u1 != colon || u2 != t.size() - colon - 1) throw std::invalid_argument("");
    } catch (...) {
      throw SyntaxError("malformed word token", sc.line, c);
    }
    if (gi < 1) throw SyntaxError("generator index must be positive", sc.line, c);
    if (ex < 0 || ex >= p)
      throw SyntaxError("word exponent must lie in [0, p)", sc.line, c);
    if (!w.empty() && gi <= w.back().gen)
      throw SyntaxError("word indices must be strictly increasing", sc.line, c);
    if (ex > 0) w.push_back({int(gi), int(ex)});
  }
  return w;
}

}  // namespace

void PcPresentation::validate() const {
  if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
  if (!is_supported_prime(p))
    throw NonPrimeError("prime " + std::to_string(p) + " out of supported range {2,3,5}");
  if (n < 1 || n > kMaxGens)
    throw IndexError("generator count must lie in [1, " + std::to_string(kMaxGens) + "]");
  auto check_word = [&](const Word& w, int floor, const std::string& where) {
    int prev = floor;
    for (const auto& s : w) {
      if (s.gen <= floor)
        throw IndexError(where + ": word references generator " +
                         std::to_string(s.gen) + " not above " + std::to_string(floor));
      if (s.gen <= prev && prev != floor)
        throw IndexError(where + ": word indices not strictly increasing");
      if (s.gen > n)
        throw IndexError(where + ": word references generator " +
                         std::to_string(s.gen) + " > " + std::to_string(n));
      if (s.exp < 1 || s.exp >= p) throw IndexError(where + ": exponent out of [1, p)");
      prev = s.gen;
    }
  };
  for (int i = 1; i <= n; ++i)
    check_word(power[size_t(i)], i, "pow " + std::to_string(i));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      check_word(comm[size_t(j)][size_t(i)], j,
                 "comm " + std::to_string(j) + " " + std::to_string(i));
}

PcPresentation parse_presentation(std::string_view text) {
  PcPresentation pres;
  bool have_name = false, have_prime = false, have_gens = false;
  // (keyword, args) lines seen before "gens"; relations need n to size arrays.
  struct PendingRel {
    bool is_pow;
    int j, i;
    Word w;
    int line;
  };
  std::vector<PendingRel> rels;
  std::set<std::pair<int, int>> seen_rel;

  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t eol = text.find('\n', start);
    std::string_view raw = text.substr(
        start, eol == std::string_view::npos ? text.size() - start : eol - start);
    ++lineno;
    start = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    std::string_view line = raw;
    // '# expect'/'# provenance' comments carry catalog metadata; other
    // comments are ignored.
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = line.substr(hash + 1);
      line = line.substr(0, hash);
      LineScanner cs{comment, lineno};
      auto key = cs.token();
      if (key == "expect") {
        auto what = std::string(cs.token());
        long long v = cs.integer("expectation value");
        if (what == "class") pres.expect.nilpotency_class = v;
        else if (what == "rank") pres.expect.rank = v;
        else if (what == "z") pres.expect.center_order = v;
        else if (what == "gamma2") pres.expect.gamma2_order = v;
        else throw SyntaxError("unknown expectation key '" + what + "'", lineno, 1);
      } else if (key == "provenance") {
        pres.provenance = std::string(cs.token());
      }
    }

    LineScanner sc{line, lineno};
    if (sc.done()) continue;
    int kwcol = sc.col();
    auto kw = sc.token();

    if (kw == "name") {
      auto t = sc.token();
      if (t.empty()) throw SyntaxError("missing name", lineno, sc.col());
      pres.name = std::string(t);
      have_name = true;
    } else if (kw == "prime") {
      long long p = sc.integer("prime");
      if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
      if (!is_supported_prime(p))
        throw NonPrimeError("prime " + std::to_string(p) + " out of supported range {2,3,5}");
      pres.p = int(p);
      have_prime = true;
    } else if (kw == "gens") {
      long long n = sc.integer("generator count");
      if (n < 1 || n > kMaxGens)
        throw SyntaxError("gens must lie in [1, " + std::to_string(kMaxGens) + "]",
                          lineno, kwcol);
      pres.n = int(n);
      have_gens = true;
    } else if (kw == "pow") {
      if (!have_prime) throw SyntaxError("pow before prime", lineno, kwcol);
      long long i = sc.integer("generator index");
      int eqcol = sc.col();
      if (sc.token() != "=") throw SyntaxError("expected '='", lineno, eqcol);
      Word w = parse_word(sc, pres.p);
      if (!seen_rel.insert({int(i), 0}).second)
        throw SyntaxError("duplicate pow relation", lineno, kwcol);
      rels.push_back({true, int(i), 0, std::move(w), lineno});
    } else if (kw == "comm") {
      if (!have_prime) throw SyntaxError("comm before prime", lineno, kwcol);
      long long j = sc.integer("generator index");
      long long i = sc.integer("generator index");
      int eqcol = sc.col();
      if (sc.token() != "=") throw SyntaxError("expected '='", lineno, eqcol);
      Word w = parse_word(sc, pres.p);
      if (j <= i)
        throw SyntaxError("comm requires j > i", lineno, kwcol);
      if (!seen_rel.insert({int(j), int(i)}).second)
        throw SyntaxError("duplicate comm relation", lineno, kwcol);
      rels.push_back({false, int(j), int(i), std::move(w), lineno});
    } else {
      throw SyntaxError("unknown keyword '" + std::string(kw) + "'", lineno, kwcol);
    }
    if (!sc.done()) throw SyntaxError("trailing tokens", lineno, sc.col());
  }

  if (!have_name) throw SyntaxError("missing 'name' line", lineno, 1);
  if (!have_prime) throw SyntaxError("missing 'prime' line", lineno, 1);
  if (!have_gens) throw SyntaxError("missing 'gens' line", lineno, 1);

  pres.power.assign(size_t(pres.n) + 1, {});
  pres.comm.assign(size_t(pres.n) + 1, {});
  for (int j = 1; j <= pres.n; ++j) pres.comm[size_t(j)].assign(size_t(j), {});

  for (auto& r : rels) {
    if (r.is_pow) {
      if (r.j < 1 || r.j > pres.n)
        throw IndexError("pow: generator " + std::to_string(r.j) + " out of range");
      pres.power[size_t(r.j)] = std::move(r.w);
    } else {
      if (r.j < 2 || r.j > pres.n || r.i < 1)
        throw IndexError("comm: generator pair (" + std::to_string(r.j) + ", " +
                         std::to_string(r.i) + ") out of range");
      pres.comm[size_t(r.j)][size_t(r.i)] = std::move(r.w);
    }
  }

  pres.validate();
  return pres;
}

PcPresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace pgl
