#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "ganita/errors.hpp"

namespace brick {

/// Context-dependent referents of ritual counting objects. The same token
/// deliberately resolves to different things under different contexts;
/// there is no default-context fallback.
class TokenRegistry {
public:
  void register_token(const std::string& token, const std::string& context,
                      const std::string& referent) {
    table_[{token, context}] = referent;
    known_tokens_.insert(token);
  }

  std::string resolve(const std::string& token,
                      const std::optional<std::string>& context = std::nullopt) const {
    if (!known_tokens_.contains(token)) throw ganita::math_error("unknown token: " + token);
    if (!context) throw ganita::math_error("ambiguous without context: " + token);
    const auto it = table_.find({token, *context});
    if (it == table_.end())
      throw ganita::math_error("token '" + token + "' has no referent in context '" + *context +
                               "'");
    return it->second;
  }

  /// The registry of SB 10.4.2 and 10.5.4, as far as the text attests.
  static TokenRegistry satapatha_defaults();

private:
  std::map<std::pair<std::string, std::string>, std::string> table_;
  std::set<std::string> known_tokens_;
};

}  // namespace brick
