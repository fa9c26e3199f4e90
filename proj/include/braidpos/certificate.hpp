#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidpos/braid.hpp"
#include "braidpos/homfly.hpp"

namespace braidpos {

struct Step {
  enum class Kind { RelationRewrite, Conjugation, Cycle, Flype, Destabilize, Stabilize };
  enum class Destab { RemoveStrand, MergeStrands };

  Kind kind = Kind::RelationRewrite;
  // RelationRewrite: letters [start, start + length) become `word`.
  std::size_t start = 0;
  std::size_t length = 0;
  // RelationRewrite: the replacement; Conjugation: the conjugator g.
  BraidWord word;
  // Conjugation: a word equal to g^-1 w g.
  BraidWord result;
  long shift = 0;
  FlypeSite site;
  // Destabilize and Stabilize.
  int sign = 0;
  Destab mode = Destab::RemoveStrand;
  int strand = 0;
  std::size_t position = 0;
  std::string note;
};

struct Certificate {
  BraidWord input;
  BraidWord output;
  std::vector<Step> trace;
};

std::string to_string(Step::Kind k);

// Applies one step. Throws std::invalid_argument when the step does not apply
// or a claimed equality fails the normal-form check.
BraidWord apply_step(const BraidWord& w, const Step& s);
BraidWord replay(const Certificate& c);
// Replays the trace and checks the closure bookkeeping: equal HOMFLYPT when
// both ends fit the Hecke kernel, and sl(out) - sl(in) = 2 (negative
// destabilizations - negative stabilizations).
CheckResult validate(const Certificate& c);

std::string to_json(const Certificate& c, int indent = 2);
Certificate certificate_from_json(const std::string& text);

// Records steps while transforming a working word. Every step is applied and
// checked as it is added.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(const BraidWord& input);

  const BraidWord& word() const { return cert_.output; }
  const Certificate& certificate() const { return cert_; }
  Certificate take() { return std::move(cert_); }

  void rewrite(std::size_t start, std::size_t length, const std::vector<Letter>& replacement,
               const std::string& note);
  void rewrite_all(const std::vector<Letter>& replacement, const std::string& note);
  void cycle(long k, const std::string& note = "");
  // Brings the letter at pos to the front.
  void cycle_to(std::size_t pos, const std::string& note = "");
  void conjugate(const BraidWord& g, const BraidWord& result, const std::string& note);
  void delta_conjugate(const std::string& note);
  void flype(const FlypeSite& site, const std::string& note);
  void remove_strand(std::size_t pos, int strand, const std::string& note);
  void merge_strands(std::size_t pos, const std::string& note);
  void stabilize(int sign, const std::string& note);
  // Appends the steps of a certificate whose input is the current word.
  void append(const Certificate& c);

 private:
  void push(Step s);
  Certificate cert_;
};

}  // namespace braidpos
