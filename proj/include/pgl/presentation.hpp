#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pgl {

// One syllable g_i^e of a relation word; exp is always in [1, p).
struct Syllable {
  int gen;
  int exp;
  bool operator==(const Syllable&) const = default;
};

// Relation right-hand side: syllables with strictly increasing generator
// indices. The empty word is the identity.
using Word = std::vector<Syllable>;

// A power-commutator presentation of a group of order p^n. Generators are
// 1-based and each has relative order exactly p:
//   g_i^p       = power[i]    (a word over generators > i)
//   [g_j, g_i]  = comm[j][i]  (j > i, a word over generators > j)
// Missing relations mean the identity / a trivial commutator.
struct PcPresentation {
  std::string name;
  int p = 0;
  int n = 0;
  std::vector<Word> power;             // index 0 unused, size n+1
  std::vector<std::vector<Word>> comm; // comm[j][i], j > i, size (n+1) x j

  // Optional assertions carried by "# expect <key> <value>" comments.
  struct Expectations {
    std::optional<long long> nilpotency_class;
    std::optional<long long> rank;
    std::optional<long long> center_order;
    std::optional<long long> gamma2_order;
  };
  Expectations expect;
  std::string provenance;  // "paper", "derived", or empty

  const Word& power_word(int i) const { return power[size_t(i)]; }
  const Word& comm_word(int j, int i) const { return comm[size_t(j)][size_t(i)]; }

  // Checks the structural invariants; throws IndexError / NonPrimeError.
  void validate() const;
};

// Parses the line-oriented presentation grammar:
//   name <identifier>
//   prime <p>
//   gens <n>
//   pow <i> = <word>
//   comm <j> <i> = <word>        (j > i)
// where <word> is empty or space-separated <index>:<exponent> tokens and
// '#' starts a comment. Throws SyntaxError / IndexError / NonPrimeError.
PcPresentation parse_presentation(std::string_view text);

// Reads a file and parses it; throws IoError on read failure.
PcPresentation load_presentation_file(const std::string& path);

}  // namespace pgl
