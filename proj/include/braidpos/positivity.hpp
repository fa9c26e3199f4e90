#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidpos/braid.hpp"
#include "braidpos/certificate.hpp"

namespace braidpos {

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input satisfies the preconditions but none of the outcomes is reached.
class Unclassified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c * letter * c^-1 with letter a positive band.
struct QPTerm {
  BraidWord conjugator;
  Letter letter;
};

BraidWord expand(const std::vector<QPTerm>& terms, int strands);
// One factor per run of equal terms, in standard letters: Plain for a bare
// sigma_i, otherwise a Group [a..., i, -a...].
GroupedWord to_grouped(const std::vector<QPTerm>& terms, int strands);

std::optional<Letter> recognize_band_factor(const Factor& f, int strands);

struct SQPDecomposition {
  bool sqp = false;
  std::vector<Letter> bands;
};
SQPDecomposition sqp_decomposition(const GroupedWord& gw);
bool is_sqp(const GroupedWord& gw);
// Letters parse as Q := empty | Q Q | c (c > 0) | x Q x^-1, so the word is a
// product of conjugates of positive generators.
bool is_qp_body(const std::vector<int>& body);
// Every factor is positive or has a QP body.
bool is_qp(const GroupedWord& gw);
// Every letter is a positive band or generator.
bool is_sqp_word(const BraidWord& w);

struct LemmaParts {
  int strands = 0;
  int i = 2;
  BraidWord x0;
  std::vector<BraidWord> x;  // x[k] is X_k for k = 1..i; x[0] is unused
};
BraidWord lemma_word(const LemmaParts& p);
BraidWord lemma_output(const LemmaParts& p);
// Throws std::invalid_argument naming the violated constraint.
void check_lemma_parts(const LemmaParts& p);
Certificate lemma_sqp1_rewrite(const LemmaParts& p);

struct RewriteOutcome {
  bool destabilized = false;
  Certificate cert;
};

// Moves the single negative band rightwards through the cyclic word with the
// band relations until it cancels. Absent if it gets stuck.
std::optional<Certificate> transport_negative_band(const BraidWord& w, std::size_t step_cap = 0);

RewriteOutcome almost_positive_to_sqp(const BraidWord& w);
BraidWord separating_word(const BraidWord& w, const BraidWord& w2);
RewriteOutcome separating_form_to_sqp(const BraidWord& w, const BraidWord& w2);

struct FourBraidOutcome {
  enum class Kind { Quasipositive, NegativelyDestabilizable, FlypeThenDestabilize };
  Kind kind = Kind::Quasipositive;
  Certificate cert;
  std::vector<QPTerm> qp;  // Quasipositive only; cert.output == expand(qp)
  BraidWord result;        // the final word
};
std::string to_string(FourBraidOutcome::Kind k);
// Throws Unclassified on sigma_{1,2}^-1 (sigma_{1,3} sigma_{2,4})^m, whose
// strand rotation returns to itself.
FourBraidOutcome four_braid_classify(const Letter& negband, const BraidWord& beta);
CheckResult validate(const FourBraidOutcome& o);

// NP exponents n_1..n_k for a1^-1 a2^n1 a3^n2 a1^n3 ... with a1 = sigma_1,
// a2 = sigma_2, a3 = sigma_{1,3}.
BraidWord np3_word(const std::vector<int>& exponents);
GroupedWord three_braid_np_to_qp(const std::vector<int>& exponents);
std::vector<int> np3_exponents(const BraidWord& w);

BraidWord k_delta_family(int delta);

int delta3_of_word(const BraidWord& w, int chi);
int delta3_of_link(int chi, int sl);
int delta4_of_link(int chi4, int sl);

std::optional<int> non_right_veering_witness(const BraidWord& w);

struct ProverResult {
  std::optional<Certificate> cert;
  std::size_t nodes = 0;
};
ProverResult move_search_prover(const BraidWord& w, std::size_t budget);

}  // namespace braidpos
