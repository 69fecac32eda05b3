#pragma once

#include <string>
#include <vector>

namespace extbar {

enum class Letter { Sigma, Phi, Gamma };

struct Word {
  std::vector<Letter> letters;

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

// Which admissibility rule applies at p = 2. Cartan words at p = 2 use only
// sigma and gamma_2 (start with sigma, end with sigma sigma); the odd-prime
// rule with phi letters is also used at p = 2 when forming p-pairs.
enum class WordKind { Cartan, Pairing };

Word parse_word(const std::string& text);  // letters 's', 'f', 'g'
std::string to_string(const Word& w, long p);

long word_degree(const Word& w, long p);
int word_twisting(const Word& w);
int word_height(const Word& w);
bool is_admissible(const Word& w, long p, WordKind kind = WordKind::Cartan);

// Admissible words of the given height and degree <= max_degree, sorted by
// degree then letters.
std::vector<Word> enumerate_words(long p, int height, long max_degree, WordKind kind = WordKind::Cartan);

struct PPair {
  Word gamma_word;  // sigma^{k+1} gamma_p alpha
  Word phi_word;    // sigma^k phi_p alpha
  long degree = 0;  // degree of gamma_word, one less than that of phi_word
  long weight = 0;  // p^twisting
  int twisting = 0;
};

std::vector<PPair> enumerate_p_pairs(long p, int height, long max_degree);

long ipow(long base, int exp);

}  // namespace extbar
