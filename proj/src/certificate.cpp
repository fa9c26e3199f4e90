#include "braidpos/certificate.hpp"

#include <json.hpp>
#include <stdexcept>

#include "braidpos/garside.hpp"

namespace braidpos {

namespace {

using nlohmann::json;

json word_json(const BraidWord& w) { return {{"strands", w.strands}, {"word", to_string(w)}}; }

BraidWord word_from(const json& j) {
  const int n = j.at("strands").get<int>();
  BraidWord w = parse_word(j.at("word").get<std::string>(), n);
  w.strands = n;
  validate(w);
  return w;
}

Step::Kind kind_from(const std::string& s) {
  static const std::pair<const char*, Step::Kind> names[] = {
      {"rewrite", Step::Kind::RelationRewrite}, {"conjugation", Step::Kind::Conjugation},
      {"cycle", Step::Kind::Cycle},             {"flype", Step::Kind::Flype},
      {"destabilize", Step::Kind::Destabilize}, {"stabilize", Step::Kind::Stabilize}};
  for (const auto& [n, k] : names)
    if (s == n) return k;
  throw std::invalid_argument("unknown step kind: " + s);
}

BraidWord slice(const BraidWord& w, std::size_t start, std::size_t length) {
  BraidWord r;
  r.strands = w.strands;
  r.letters.assign(w.letters.begin() + static_cast<long>(start),
                   w.letters.begin() + static_cast<long>(start + length));
  return r;
}

}  // namespace

std::string to_string(Step::Kind k) {
  switch (k) {
    case Step::Kind::RelationRewrite: return "rewrite";
    case Step::Kind::Conjugation: return "conjugation";
    case Step::Kind::Cycle: return "cycle";
    case Step::Kind::Flype: return "flype";
    case Step::Kind::Destabilize: return "destabilize";
    case Step::Kind::Stabilize: return "stabilize";
  }
  return "?";
}

BraidWord apply_step(const BraidWord& w, const Step& s) {
  switch (s.kind) {
    case Step::Kind::RelationRewrite: {
      if (s.start + s.length > w.letters.size()) throw std::invalid_argument("rewrite site out of range");
      if (s.word.strands != w.strands) throw std::invalid_argument("rewrite changes the strand count");
      validate(s.word);
      if (!equal(slice(w, s.start, s.length), s.word))
        throw std::invalid_argument("rewrite is not a braid equality: " + to_string(slice(w, s.start, s.length)) +
                                    " -> " + to_string(s.word));
      BraidWord r;
      r.strands = w.strands;
      r.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(s.start));
      r.letters.insert(r.letters.end(), s.word.letters.begin(), s.word.letters.end());
      r.letters.insert(r.letters.end(), w.letters.begin() + static_cast<long>(s.start + s.length), w.letters.end());
      return r;
    }
    case Step::Kind::Conjugation:
      if (s.result.strands != w.strands) throw std::invalid_argument("conjugation changes the strand count");
      validate(s.result);
      if (!equal(conjugate(w, s.word), s.result)) throw std::invalid_argument("conjugation result mismatch");
      return s.result;
    case Step::Kind::Cycle:
      return cycle(w, s.shift);
    case Step::Kind::Flype:
      return apply_flype(w, s.site);
    case Step::Kind::Destabilize: {
      if (s.position >= w.letters.size()) throw std::invalid_argument("destabilization position out of range");
      if (w.letters[s.position].sign != s.sign) throw std::invalid_argument("destabilization sign mismatch");
      if (s.mode == Step::Destab::RemoveStrand) return remove_strand(w, s.position, s.strand);
      return merge_strands(w, s.position);
    }
    case Step::Kind::Stabilize:
      if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("stabilization sign must be +-1");
      return stabilize(w, s.sign);
  }
  throw std::invalid_argument("unknown step");
}

BraidWord replay(const Certificate& c) {
  BraidWord w = c.input;
  for (const auto& s : c.trace) w = apply_step(w, s);
  return w;
}

CheckResult validate(const Certificate& c) {
  BraidWord end;
  try {
    end = replay(c);
  } catch (const std::exception& e) {
    return {false, std::string("replay failed: ") + e.what()};
  }
  if (!(end == c.output)) return {false, "replay ends at " + to_string(end) + ", not the recorded output"};
  int expected = 0;
  for (const auto& s : c.trace) {
    if (s.kind == Step::Kind::Destabilize && s.sign < 0) expected += 2;
    if (s.kind == Step::Kind::Stabilize && s.sign < 0) expected -= 2;
  }
  if (self_linking(c.output) - self_linking(c.input) != expected)
    return {false, "self-linking bookkeeping fails"};
  if (c.input.strands <= kMaxHeckeStrands && c.output.strands <= kMaxHeckeStrands &&
      !(homfly_closed_braid(c.input) == homfly_closed_braid(c.output)))
    return {false, "HOMFLYPT of input and output differ"};
  return {true, "certificate replays"};
}

std::string to_json(const Certificate& c, int indent) {
  json j;
  j["input"] = word_json(c.input);
  j["output"] = word_json(c.output);
  j["trace"] = json::array();
  for (const auto& s : c.trace) {
    json t{{"kind", to_string(s.kind)}};
    switch (s.kind) {
      case Step::Kind::RelationRewrite:
        t["start"] = s.start;
        t["length"] = s.length;
        t["replacement"] = word_json(s.word);
        break;
      case Step::Kind::Conjugation:
        t["conjugator"] = word_json(s.word);
        t["result"] = word_json(s.result);
        break;
      case Step::Kind::Cycle:
        t["shift"] = s.shift;
        break;
      case Step::Kind::Flype:
        t["site"] = {{"start", s.site.start}, {"eps_first", s.site.eps_first}, {"eps", s.site.eps},
                     {"m", s.site.m},         {"v_len", s.site.v_len},         {"top", s.site.top}};
        break;
      case Step::Kind::Destabilize:
        t["sign"] = s.sign;
        t["position"] = s.position;
        t["mode"] = s.mode == Step::Destab::RemoveStrand ? "remove-strand" : "merge-strands";
        if (s.mode == Step::Destab::RemoveStrand) t["strand"] = s.strand;
        break;
      case Step::Kind::Stabilize:
        t["sign"] = s.sign;
        break;
    }
    if (!s.note.empty()) t["note"] = s.note;
    j["trace"].push_back(t);
  }
  return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  Certificate c;
  c.input = word_from(j.at("input"));
  c.output = word_from(j.at("output"));
  for (const auto& t : j.at("trace")) {
    Step s;
    s.kind = kind_from(t.at("kind").get<std::string>());
    switch (s.kind) {
      case Step::Kind::RelationRewrite:
        s.start = t.at("start").get<std::size_t>();
        s.length = t.at("length").get<std::size_t>();
        s.word = word_from(t.at("replacement"));
        break;
      case Step::Kind::Conjugation:
        s.word = word_from(t.at("conjugator"));
        s.result = word_from(t.at("result"));
        break;
      case Step::Kind::Cycle:
        s.shift = t.at("shift").get<long>();
        break;
      case Step::Kind::Flype: {
        const auto& f = t.at("site");
        s.site = {f.at("start").get<std::size_t>(), f.at("eps_first").get<bool>(), f.at("eps").get<int>(),
                  f.at("m").get<int>(), f.at("v_len").get<std::size_t>(), f.at("top").get<bool>()};
        break;
      }
      case Step::Kind::Destabilize:
        s.sign = t.at("sign").get<int>();
        s.position = t.at("position").get<std::size_t>();
        s.mode = t.at("mode").get<std::string>() == "merge-strands" ? Step::Destab::MergeStrands
                                                                     : Step::Destab::RemoveStrand;
        if (s.mode == Step::Destab::RemoveStrand) s.strand = t.at("strand").get<int>();
        break;
      case Step::Kind::Stabilize:
        s.sign = t.at("sign").get<int>();
        break;
    }
    if (t.contains("note")) s.note = t.at("note").get<std::string>();
    c.trace.push_back(std::move(s));
  }
  return c;
}

CertificateBuilder::CertificateBuilder(const BraidWord& input) {
  cert_.input = input;
  cert_.output = input;
}

void CertificateBuilder::push(Step s) {
  cert_.output = apply_step(cert_.output, s);
  cert_.trace.push_back(std::move(s));
}

void CertificateBuilder::rewrite(std::size_t start, std::size_t length, const std::vector<Letter>& replacement,
                                 const std::string& note) {
  Step s;
  s.kind = Step::Kind::RelationRewrite;
  s.start = start;
  s.length = length;
  s.word.strands = cert_.output.strands;
  s.word.letters = replacement;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::rewrite_all(const std::vector<Letter>& replacement, const std::string& note) {
  rewrite(0, cert_.output.letters.size(), replacement, note);
}

void CertificateBuilder::cycle(long k, const std::string& note) {
  const long len = static_cast<long>(cert_.output.letters.size());
  if (len == 0 || ((k % len) + len) % len == 0) return;
  Step s;
  s.kind = Step::Kind::Cycle;
  s.shift = k;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::cycle_to(std::size_t pos, const std::string& note) { cycle(static_cast<long>(pos), note); }

void CertificateBuilder::conjugate(const BraidWord& g, const BraidWord& result, const std::string& note) {
  Step s;
  s.kind = Step::Kind::Conjugation;
  s.word = g;
  s.result = result;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::delta_conjugate(const std::string& note) {
  conjugate(delta_braid(cert_.output.strands).word(), delta_flip(cert_.output), note);
}

void CertificateBuilder::flype(const FlypeSite& site, const std::string& note) {
  Step s;
  s.kind = Step::Kind::Flype;
  s.site = site;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::remove_strand(std::size_t pos, int strand, const std::string& note) {
  Step s;
  s.kind = Step::Kind::Destabilize;
  s.mode = Step::Destab::RemoveStrand;
  s.position = pos;
  s.strand = strand;
  s.sign = cert_.output.letters.at(pos).sign;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::merge_strands(std::size_t pos, const std::string& note) {
  Step s;
  s.kind = Step::Kind::Destabilize;
  s.mode = Step::Destab::MergeStrands;
  s.position = pos;
  s.sign = cert_.output.letters.at(pos).sign;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::stabilize(int sign, const std::string& note) {
  Step s;
  s.kind = Step::Kind::Stabilize;
  s.sign = sign;
  s.note = note;
  push(std::move(s));
}

void CertificateBuilder::append(const Certificate& c) {
  if (!(c.input == cert_.output)) throw std::invalid_argument("appended certificate starts elsewhere");
  for (const auto& s : c.trace) push(s);
}

}  // namespace braidpos
