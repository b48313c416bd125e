#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anuvad {

using CodePoint = char32_t;

class UnicodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Decodes the code point starting at s[i], advancing i past it.
// Rejects truncated sequences, overlong encodings, surrogates and
// values above U+10FFFF.
inline CodePoint decode_utf8(std::string_view s, std::size_t& i) {
  auto byte = [&](std::size_t k) -> std::uint8_t {
    return static_cast<std::uint8_t>(s[k]);
  };
  if (i >= s.size()) throw UnicodeError("utf-8: read past end of input");
  std::uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len;
  CodePoint cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    throw UnicodeError("utf-8: invalid lead byte at offset " + std::to_string(i));
  }
  if (i + len > s.size())
    throw UnicodeError("utf-8: truncated sequence at offset " + std::to_string(i));
  for (int k = 1; k < len; ++k) {
    std::uint8_t b = byte(i + k);
    if ((b & 0xC0) != 0x80)
      throw UnicodeError("utf-8: bad continuation byte at offset " +
                         std::to_string(i + k));
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr CodePoint min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < min_for_len[len])
    throw UnicodeError("utf-8: overlong encoding at offset " + std::to_string(i));
  if (cp >= 0xD800 && cp <= 0xDFFF)
    throw UnicodeError("utf-8: surrogate code point at offset " + std::to_string(i));
  if (cp > 0x10FFFF)
    throw UnicodeError("utf-8: code point out of range at offset " + std::to_string(i));
  i += len;
  return cp;
}

inline std::vector<CodePoint> to_codepoints(std::string_view s) {
  std::vector<CodePoint> out;
  std::size_t i = 0;
  while (i < s.size()) out.push_back(decode_utf8(s, i));
  return out;
}

inline void append_utf8(std::string& out, CodePoint cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string from_codepoints(const std::vector<CodePoint>& cps) {
  std::string out;
  for (CodePoint cp : cps) append_utf8(out, cp);
  return out;
}

inline bool is_valid_utf8(std::string_view s) {
  try {
    std::size_t i = 0;
    while (i < s.size()) decode_utf8(s, i);
    return true;
  } catch (const UnicodeError&) {
    return false;
  }
}

inline bool is_devanagari(CodePoint cp) { return cp >= 0x0900 && cp <= 0x097F; }

inline bool is_devanagari_word(std::string_view s) {
  if (s.empty()) return false;
  for (CodePoint cp : to_codepoints(s))
    if (!is_devanagari(cp)) return false;
  return true;
}

// Sentence/word delimiters used by the pipeline.
constexpr CodePoint kDanda = 0x0964;        // ।
constexpr CodePoint kDoubleDanda = 0x0965;  // ॥
constexpr CodePoint kZwnj = 0x200C;
constexpr CodePoint kZwj = 0x200D;
constexpr CodePoint kBom = 0xFEFF;

inline bool is_devanagari_digit(CodePoint cp) { return cp >= 0x0966 && cp <= 0x096F; }

inline bool ends_with_codepoints(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace anuvad
