#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidpos {

// A standard generator sigma_i is stored with j = i + 1 so that both kinds
// expose the pair of strands they join.
struct Letter {
  bool band = false;
  int i = 1;
  int j = 2;
  int sign = 1;

  static Letter gen(int index, int sign = 1) { return {false, index, index + 1, sign}; }
  static Letter bandgen(int i, int j, int sign = 1) { return {true, i, j, sign}; }

  Letter inverse() const { return {band, i, j, -sign}; }
  bool touches(int strand) const { return i == strand || j == strand; }
  bool operator==(const Letter&) const = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const BraidWord&) const = default;
};

struct Factor {
  enum class Kind { Plain, Group, Band };
  Kind kind = Kind::Plain;
  std::vector<int> body;  // Plain: one signed index; Group: the parenthesized indices
  int exponent = 1;
  int band_i = 0;
  int band_j = 0;
  int band_sign = 1;
};

struct GroupedWord {
  int strands = 1;
  std::vector<Factor> factors;
};

// Images are stored zero-based: img[k] is the bottom position of the strand
// that starts at top position k.
struct Permutation {
  std::vector<int> img;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img < o.img; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

GroupedWord parse_table_word(const std::string& text, std::optional<int> strands = std::nullopt);
BraidWord flatten(const GroupedWord& gw);
BraidWord parse_word(const std::string& text, std::optional<int> strands = std::nullopt);

std::string to_string(const Letter& l);
std::string to_string(const BraidWord& w);
std::string to_string(const GroupedWord& gw);
std::string to_string(const Permutation& p);

void validate(const BraidWord& w);
BraidWord make_word(int strands, const std::vector<int>& indices);

BraidWord band_to_std(const BraidWord& w);
BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

int writhe(const BraidWord& w);
int self_linking(const BraidWord& w);
int euler_char_bennequin(const BraidWord& w);
int negative_band_count(const BraidWord& w);
Permutation permutation_of(const BraidWord& w);
bool all_positive(const BraidWord& w);
bool is_standard(const BraidWord& w);

BraidWord conjugate(const BraidWord& w, const BraidWord& g);
BraidWord cycle(const BraidWord& w, long k);
BraidWord mirror(const BraidWord& w);
BraidWord delta_flip(const BraidWord& w);
BraidWord with_strands(const BraidWord& w, int strands);

// A flype site is a cyclic segment [start, start + 1 + v_len + |m|) that reads
// either eps.v.run (eps_first) or run.v.eps, where eps is a single sigma_1^{+-1}
// and run is sigma_1^m. The rest of the word is w. With top set, the roles of
// strand 1 and sigma_1 are played by strand n and sigma_{n-1}.
struct FlypeSite {
  std::size_t start = 0;
  bool eps_first = true;
  int eps = 1;
  int m = 0;
  std::size_t v_len = 0;
  bool top = false;
  bool operator==(const FlypeSite&) const = default;
};

bool is_sigma1(const Letter& l);
std::vector<FlypeSite> find_flypes(const BraidWord& w, bool top = false);
// The flyped word keeps the frame of the input: letters of w stay in place and
// the segment is rewritten in the same positions.
BraidWord apply_flype(const BraidWord& w, const FlypeSite& site);

struct Destabilization {
  BraidWord word;
  int sign = 1;
  std::size_t position = 0;
};

std::optional<Destabilization> try_destabilize(const BraidWord& w);
BraidWord stabilize(const BraidWord& w, int sign);

// Letters are compared by strand pair and sign; the band flag is ignored.
bool same_letter(const Letter& a, const Letter& b);
// Band letter on (i, j), stored as a standard generator when j = i + 1.
Letter band(int i, int j, int sign = 1);
BraidWord canonical(const BraidWord& w);
// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// The strand touched by the letter at pos and by no other letter, preferring
// the higher one.
std::optional<int> lone_strand(const BraidWord& w, std::size_t pos);
// Deletes the letter at pos, which must be the only letter touching strand,
// and renumbers the strands above it. The closure is unchanged.
BraidWord remove_strand(const BraidWord& w, std::size_t pos, int strand);
// Deletes a standard sigma_i^{+-1} at pos when no other letter joins a strand
// at or below i to one above it; strands i and i + 1 merge. The closure is
// unchanged (a connected sum splits along that letter).
bool can_merge(const BraidWord& w, std::size_t pos);
BraidWord merge_strands(const BraidWord& w, std::size_t pos);

}  // namespace braidpos
