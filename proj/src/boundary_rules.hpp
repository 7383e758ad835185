#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resist/boundary.hpp"
#include "resist/error.hpp"

namespace resist::detail {

/// Key=value table over boundary points. Precedence: exact point name,
/// longest "prefix:w" match on ray words, "ray"/"vertex" kind keys, "default".
template <typename Value>
class KeyedRules {
 public:
  template <typename ParseValue>
  static KeyedRules parse(const std::string& text, ParseValue parse_value) {
    KeyedRules rules;
    std::size_t start = 0;
    while (start < text.size()) {
      auto stop = text.find(',', start);
      if (stop == std::string::npos) stop = text.size();
      const auto item = text.substr(start, stop - start);
      start = stop + 1;
      if (item.empty()) continue;
      const auto eq = item.rfind('=');
      if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::ConfigError, "expected key=value, got '" + item + "'");
      const auto key = item.substr(0, eq);
      const Value value = parse_value(item.substr(eq + 1));
      if (key.rfind("prefix:", 0) == 0) {
        rules.prefixes_.emplace_back(parse_word(key.substr(7)), value);
      } else {
        rules.named_[key] = value;
      }
    }
    return rules;
  }

  std::optional<Value> at(const BoundaryPoint& p) const {
    if (auto it = named_.find(p.name); it != named_.end()) return it->second;
    if (p.kind == BoundaryPoint::Kind::RayEnd && p.name.rfind("ray:", 0) == 0) {
      std::optional<Value> best;
      std::size_t best_len = 0;
      for (const auto& [word, value] : prefixes_) {
        bool match = true;
        for (std::size_t i = 0; i < word.size() && match; ++i) match = p.letter(i) == word[i];
        if (match && (!best || word.size() > best_len)) {
          best = value;
          best_len = word.size();
        }
      }
      if (best) return best;
    }
    const char* kind_key = p.kind == BoundaryPoint::Kind::Vertex ? "vertex" : "ray";
    if (auto it = named_.find(kind_key); it != named_.end()) return it->second;
    if (auto it = named_.find("default"); it != named_.end()) return it->second;
    return std::nullopt;
  }

 private:
  static std::vector<std::int64_t> parse_word(const std::string& text) {
    std::vector<std::int64_t> word;
    std::size_t start = 0;
    while (start < text.size()) {
      auto stop = text.find('.', start);
      if (stop == std::string::npos) stop = text.size();
      try {
        word.push_back(std::stoll(text.substr(start, stop - start)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, "bad prefix word '" + text + "'");
      }
      start = stop + 1;
    }
    return word;
  }

  std::map<std::string, Value> named_;
  std::vector<std::pair<std::vector<std::int64_t>, Value>> prefixes_;
};

}  // namespace resist::detail
