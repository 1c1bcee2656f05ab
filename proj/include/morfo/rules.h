#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morfo {

// Affix grammar:  [[[DP+]DP+]DP+] root [[+DS][+PP][+P]]

enum class AffixClass : std::uint8_t { DP, DS, PP, P };

// Derivational prefixes. `per` is kept apart from `pe` so that "pejalan" and
// "perjalanan" stay distinguishable after separation.
enum class Prefix : std::uint8_t { me, ber, ter, di, ke, se, pe, per };
enum class DerivSuffix : std::uint8_t { kan, i, an };
enum class Possessive : std::uint8_t { ku, mu, nya };
enum class Particle : std::uint8_t { lah, kah, tah };

inline constexpr std::array kAllPrefixes = {Prefix::me, Prefix::ber, Prefix::ter, Prefix::di,
                                            Prefix::ke, Prefix::se,  Prefix::pe,  Prefix::per};
inline constexpr std::array kAllDerivSuffixes = {DerivSuffix::kan, DerivSuffix::i, DerivSuffix::an};
inline constexpr std::array kAllPossessives = {Possessive::ku, Possessive::mu, Possessive::nya};
inline constexpr std::array kAllParticles = {Particle::lah, Particle::kah, Particle::tah};

std::string_view name(Prefix p);
std::string_view name(DerivSuffix s);
std::string_view name(Possessive s);
std::string_view name(Particle s);

struct Affix {
  AffixClass kind;
  std::string_view name;
  bool operator==(const Affix&) const = default;
};

// Lookup by canonical name. "pe" and "per" are distinct prefixes.
std::optional<Affix> find_affix(std::string_view name);
std::optional<Prefix> find_prefix(std::string_view name);

// Character classes over lowercase ASCII. V and C partition a-z.
namespace charclass {
constexpr bool letter(char c) { return c >= 'a' && c <= 'z'; }
constexpr bool vowel(char c) {
  return c == 'a' || c == 'i' || c == 'u' || c == 'e' || c == 'o';
}
constexpr bool consonant(char c) { return letter(c) && !vowel(c); }
}  // namespace charclass

// True iff every byte is in a-z.
bool is_lower_word(std::string_view s);

struct RuleId {
  Prefix affix;
  int ordinal;               // row number in the rule table for this affix family
  std::string_view variant;  // empty for the row's primary alternative
  std::string str() const;
  bool operator==(const RuleId&) const = default;
};

// One morphophonemic prefix rule. Stripping removes `surface` from the word start and
// prepends `restore` to what is left; the result is the stem. Generation is the inverse:
// a stem starting with `restore` becomes `surface` + stem[restore.size():]. `matches`
// is the stem shape the rule is licensed for, checked in both directions.
struct PrefixRule {
  RuleId id;
  Prefix prefix;             // affix realized; differs from id.affix for the per~ rows
  std::string_view pattern;  // printed notation, for dumps
  std::string_view surface;
  std::string_view restore;
  bool (*matches)(std::string_view stem);
  // Extra condition for generation only, or null.
  bool (*generation_guard)(std::string_view stem, std::optional<Prefix> inner);
  std::string_view example;
  bool supplementary = false;  // not one of the printed rows
};

std::span<const PrefixRule> prefix_rules();

struct PrefixStrip {
  Prefix prefix;
  std::string remainder;
  RuleId rule;
  bool operator==(const PrefixStrip&) const = default;
};

// Every rule whose surface and stem shape match, in table order. Rules overlap; the
// caller disambiguates. Input must be lowercase a-z; anything else yields no candidates.
std::vector<PrefixStrip> strip_prefix_candidates(std::string_view surface);

struct SuffixChain {
  std::string core;
  std::optional<DerivSuffix> ds;
  std::optional<Possessive> pp;
  std::optional<Particle> p;
  bool operator==(const SuffixChain&) const = default;
};

// All strippings consistent with slot order DS < PP < P, including the empty one.
// Cores are never empty.
std::vector<SuffixChain> strip_suffix_chain(std::string_view surface);

struct CombinationConstraint {
  Prefix prefix;
  std::vector<DerivSuffix> disallowed;
  // Only enforced when the prefix is not the outermost one ("~per~").
  bool inner_only = false;
};

std::span<const CombinationConstraint> combination_constraints();

// false iff some (prefix, ds) pair is disallowed. Prefixes are outermost first.
bool is_allowed(std::span<const Prefix> prefixes, std::optional<DerivSuffix> ds);

// Rule used to realize `prefix` on `stem`. `inner` is the next prefix inside this one,
// if any. Throws NoGenerationRule.
const PrefixRule& generation_rule(Prefix prefix, std::string_view stem,
                                  std::optional<Prefix> inner = std::nullopt);

// Surface form of `prefix` attached to `stem`. Throws NoGenerationRule.
std::string generate_prefix(Prefix prefix, std::string_view stem,
                            std::optional<Prefix> inner = std::nullopt);

// Roots that keep their initial k after meng- (mengkalkulasi, not mengalkulasi).
std::span<const std::string_view> k_retaining_roots();

// Plain-text report of the rule tables and combination constraints.
void dump_rules(std::ostream& out);

}  // namespace morfo
