#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anuvad {

enum class POSTag { NOUN, PRON, VERB, AUX, ADJ, ADV, PREP, CONJ, QWORD, NUM, UNK };

enum class Number { SG, PL, ANY };

enum class Terminator { DANDA, QUESTION, NONE };

enum class Tense { PRESENT_INDEFINITE, PRESENT_CONTINUOUS, PAST_COPULA, UNKNOWN };

inline std::string_view pos_name(POSTag t) {
  switch (t) {
    case POSTag::NOUN: return "NOUN";
    case POSTag::PRON: return "PRON";
    case POSTag::VERB: return "VERB";
    case POSTag::AUX: return "AUX";
    case POSTag::ADJ: return "ADJ";
    case POSTag::ADV: return "ADV";
    case POSTag::PREP: return "PREP";
    case POSTag::CONJ: return "CONJ";
    case POSTag::QWORD: return "QWORD";
    case POSTag::NUM: return "NUM";
    case POSTag::UNK: return "UNK";
  }
  return "UNK";
}

inline std::optional<POSTag> parse_pos(std::string_view s) {
  if (s == "NOUN") return POSTag::NOUN;
  if (s == "PRON") return POSTag::PRON;
  if (s == "VERB") return POSTag::VERB;
  if (s == "AUX") return POSTag::AUX;
  if (s == "ADJ") return POSTag::ADJ;
  if (s == "ADV") return POSTag::ADV;
  if (s == "PREP") return POSTag::PREP;
  if (s == "CONJ") return POSTag::CONJ;
  if (s == "QWORD") return POSTag::QWORD;
  if (s == "NUM") return POSTag::NUM;
  if (s == "UNK") return POSTag::UNK;
  return std::nullopt;
}

inline std::string_view number_name(Number n) {
  switch (n) {
    case Number::SG: return "SG";
    case Number::PL: return "PL";
    case Number::ANY: return "ANY";
  }
  return "ANY";
}

inline std::optional<Number> parse_number(std::string_view s) {
  if (s == "SG") return Number::SG;
  if (s == "PL") return Number::PL;
  if (s == "ANY") return Number::ANY;
  return std::nullopt;
}

// One source-text unit. pos/root/number/english are filled in by the
// morphological analyzer; replicative is set by the transfer stage.
struct Token {
  std::string surface;
  int position = 0;
  std::optional<POSTag> pos;
  std::optional<std::string> root;
  std::optional<Number> number;
  std::vector<std::string> english;  // synonym candidates, file order
  bool replicative = false;

  bool operator==(const Token& o) const {
    return surface == o.surface && position == o.position && pos == o.pos &&
           root == o.root && number == o.number && english == o.english &&
           replicative == o.replicative;
  }
};

struct Sentence {
  std::string text;
  Terminator terminator = Terminator::NONE;
  int index = 0;
};

}  // namespace anuvad
