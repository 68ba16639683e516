#pragma once

// Brute-force reference generators for the test suite. They share no code
// with the library: validity is re-derived from scratch so that agreement
// between the two is evidence, not tautology.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

// Every word over {E,N,S,W} of length 2n+2 that walks from (0,0) to (n,n),
// stays weakly in the first quadrant, and uses exactly one backward letter.
// Tries all 4^(2n+2) words; fine for n <= 4.
inline std::vector<std::string> quadrant_words(int n) {
  const int length = 2 * n + 2;
  static constexpr char kLetters[4] = {'E', 'N', 'S', 'W'};
  std::vector<std::string> found;
  std::string word(length, 'E');
  std::vector<int> digit(length, 0);
  while (true) {
    int x = 0;
    int y = 0;
    int backward = 0;
    bool inside = true;
    for (char c : word) {
      if (c == 'E') ++x;
      if (c == 'N') ++y;
      if (c == 'S') { --y; ++backward; }
      if (c == 'W') { --x; ++backward; }
      if (x < 0 || y < 0) {
        inside = false;
        break;
      }
    }
    if (inside && x == n && y == n && backward == 1) found.push_back(word);

    int pos = length - 1;
    while (pos >= 0 && digit[pos] == 3) {
      digit[pos] = 0;
      word[pos] = kLetters[0];
      --pos;
    }
    if (pos < 0) break;
    ++digit[pos];
    word[pos] = kLetters[digit[pos]];
  }
  // Generation order over E < N < S < W is already lexicographic.
  return found;
}

// Every standard filling of the row profile (n+2, 2, 1^n), found by testing
// all (2n+4)! permutations of 1..2n+4. Fine for n <= 1 only.
inline std::vector<std::vector<int>> standard_fillings(int n) {
  const int boxes = 2 * n + 4;
  std::vector<int> lengths = {n + 2, 2};
  lengths.insert(lengths.end(), n, 1);
  std::vector<int> offsets = {0};
  for (int len : lengths) offsets.push_back(offsets.back() + len);

  std::vector<int> perm(boxes);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> found;
  do {
    bool ok = true;
    for (std::size_t r = 0; r < lengths.size() && ok; ++r) {
      for (int c = 0; c < lengths[r] && ok; ++c) {
        const int value = perm[offsets[r] + c];
        if (c > 0 && value <= perm[offsets[r] + c - 1]) ok = false;
        if (r > 0 && c < lengths[r - 1] && value <= perm[offsets[r - 1] + c]) ok = false;
      }
    }
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // next_permutation visits permutations in lexicographic order, which is
  // exactly reading-word order here.
  return found;
}

}  // namespace oracle
