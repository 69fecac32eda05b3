#include "extbar/words.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace extbar {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Word parse_word(const std::string& text) {
  Word w;
  for (char c : text) {
    switch (c) {
      case 's': w.letters.push_back(Letter::Sigma); break;
      case 'f': w.letters.push_back(Letter::Phi); break;
      case 'g': w.letters.push_back(Letter::Gamma); break;
      default: throw std::invalid_argument(std::string("unknown letter '") + c + "'");
    }
  }
  return w;
}

std::string to_string(const Word& w, long p) {
  const std::string sub = std::to_string(p);
  std::string out;
  for (std::size_t i = 0; i < w.letters.size();) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    std::string letter = w.letters[i] == Letter::Sigma ? "σ" : (w.letters[i] == Letter::Phi ? "φ" + sub : "γ" + sub);
    const std::size_t run = j - i;
    if (w.letters[i] == Letter::Sigma || run == 1) {
      for (std::size_t k = 0; k < run; ++k) out += letter;
    } else {
      out += letter + "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

long word_degree(const Word& w, long p) {
  long d = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (*it) {
      case Letter::Sigma: d = d + 1; break;
      case Letter::Gamma: d = p * d; break;
      case Letter::Phi: d = p * d + 2; break;
    }
  }
  return d;
}

int word_twisting(const Word& w) {
  return static_cast<int>(std::count_if(w.letters.begin(), w.letters.end(),
                                        [](Letter l) { return l != Letter::Sigma; }));
}

int word_height(const Word& w) {
  return static_cast<int>(std::count_if(w.letters.begin(), w.letters.end(),
                                        [](Letter l) { return l != Letter::Gamma; }));
}

namespace {

bool cartan_two(long p, WordKind kind) { return p == 2 && kind == WordKind::Cartan; }

}  // namespace

bool is_admissible(const Word& w, long p, WordKind kind) {
  const auto& l = w.letters;
  if (l.empty()) return false;
  if (cartan_two(p, kind)) {
    if (std::find(l.begin(), l.end(), Letter::Phi) != l.end()) return false;
    return l.size() >= 2 && l.front() == Letter::Sigma && l[l.size() - 1] == Letter::Sigma &&
           l[l.size() - 2] == Letter::Sigma;
  }
  if (l.front() == Letter::Gamma || l.back() != Letter::Sigma) return false;
  int sigmas = 0;
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    if (*it == Letter::Sigma)
      ++sigmas;
    else if (sigmas % 2 != 0)
      return false;
  }
  return true;
}

std::vector<Word> enumerate_words(long p, int height, long max_degree, WordKind kind) {
  std::vector<std::pair<long, Word>> found;
  std::vector<Letter> reversed;  // letters from right to left
  const bool two = cartan_two(p, kind);
  auto rec = [&](auto&& self, long degree, int sigmas, int h) -> void {
    if (degree > max_degree || h > height) return;
    if (h == height) {
      Word w{std::vector<Letter>(reversed.rbegin(), reversed.rend())};
      if (is_admissible(w, p, kind)) found.emplace_back(degree, std::move(w));
    }
    reversed.push_back(Letter::Sigma);
    self(self, degree + 1, sigmas + 1, h + 1);
    reversed.pop_back();
    const bool may_twist = two ? reversed.size() >= 2 : (sigmas > 0 && sigmas % 2 == 0);
    if (!may_twist) return;
    reversed.push_back(Letter::Gamma);
    self(self, p * degree, sigmas, h);
    reversed.pop_back();
    if (!two) {
      reversed.push_back(Letter::Phi);
      self(self, p * degree + 2, sigmas, h + 1);
      reversed.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(found.begin(), found.end());
  std::vector<Word> out;
  for (auto& [d, w] : found) out.push_back(std::move(w));
  return out;
}

std::vector<PPair> enumerate_p_pairs(long p, int height, long max_degree) {
  std::map<Word, PPair> pairs;
  for (const Word& w : enumerate_words(p, height, max_degree + 1, WordKind::Pairing)) {
    const auto& l = w.letters;
    std::size_t j = 0;
    while (j < l.size() && l[j] == Letter::Sigma) ++j;
    if (j == l.size()) continue;  // sigma^n is unpaired
    Word gamma_word, phi_word;
    // w = sigma^j x alpha with x in {phi, gamma}; the partner swaps
    // sigma^(k+1) gamma and sigma^k phi.
    const std::size_t k = l[j] == Letter::Phi ? j : j - 1;
    gamma_word.letters.assign(k + 1, Letter::Sigma);
    gamma_word.letters.push_back(Letter::Gamma);
    phi_word.letters.assign(k, Letter::Sigma);
    phi_word.letters.push_back(Letter::Phi);
    gamma_word.letters.insert(gamma_word.letters.end(), l.begin() + static_cast<long>(j) + 1, l.end());
    phi_word.letters.insert(phi_word.letters.end(), l.begin() + static_cast<long>(j) + 1, l.end());
    PPair pr;
    pr.degree = word_degree(gamma_word, p);
    if (pr.degree > max_degree) continue;
    pr.twisting = word_twisting(gamma_word);
    pr.weight = ipow(p, pr.twisting);
    pr.gamma_word = gamma_word;
    pr.phi_word = phi_word;
    pairs.emplace(gamma_word, std::move(pr));
  }
  std::vector<PPair> out;
  for (auto& [k, v] : pairs) out.push_back(std::move(v));
  std::stable_sort(out.begin(), out.end(), [](const PPair& a, const PPair& b) { return a.degree < b.degree; });
  return out;
}

}  // namespace extbar
