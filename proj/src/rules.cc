#include "morfo/rules.h"

#include <algorithm>
#include <ostream>

#include "morfo/errors.h"

namespace morfo {

std::string_view name(Prefix p) {
  switch (p) {
    case Prefix::me: return "me";
    case Prefix::ber: return "ber";
    case Prefix::ter: return "ter";
    case Prefix::di: return "di";
    case Prefix::ke: return "ke";
    case Prefix::se: return "se";
    case Prefix::pe: return "pe";
    case Prefix::per: return "per";
  }
  return {};
}

std::string_view name(DerivSuffix s) {
  switch (s) {
    case DerivSuffix::kan: return "kan";
    case DerivSuffix::i: return "i";
    case DerivSuffix::an: return "an";
  }
  return {};
}

std::string_view name(Possessive s) {
  switch (s) {
    case Possessive::ku: return "ku";
    case Possessive::mu: return "mu";
    case Possessive::nya: return "nya";
  }
  return {};
}

std::string_view name(Particle s) {
  switch (s) {
    case Particle::lah: return "lah";
    case Particle::kah: return "kah";
    case Particle::tah: return "tah";
  }
  return {};
}

std::optional<Prefix> find_prefix(std::string_view n) {
  for (Prefix p : kAllPrefixes)
    if (name(p) == n) return p;
  return std::nullopt;
}

std::optional<Affix> find_affix(std::string_view n) {
  if (auto p = find_prefix(n)) return Affix{AffixClass::DP, name(*p)};
  for (auto s : kAllDerivSuffixes)
    if (name(s) == n) return Affix{AffixClass::DS, name(s)};
  for (auto s : kAllPossessives)
    if (name(s) == n) return Affix{AffixClass::PP, name(s)};
  for (auto s : kAllParticles)
    if (name(s) == n) return Affix{AffixClass::P, name(s)};
  return std::nullopt;
}

bool is_lower_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), charclass::letter);
}

std::string RuleId::str() const {
  std::string out(name(affix));
  out += '.';
  out += std::to_string(ordinal);
  if (!variant.empty()) {
    out += '-';
    out += variant;
  }
  return out;
}

namespace {

using namespace charclass;

constexpr char at(std::string_view s, std::size_t i) { return i < s.size() ? s[i] : '\0'; }
constexpr bool one_of(char c, std::string_view set) {
  return c != '\0' && set.find(c) != std::string_view::npos;
}
constexpr bool frag_is(std::string_view s, std::size_t pos, std::string_view frag) {
  return s.size() >= pos + frag.size() && s.substr(pos, frag.size()) == frag;
}

// Stem shapes.
bool any_letter(std::string_view s) { return letter(at(s, 0)); }
bool starts_vowel(std::string_view s) { return vowel(at(s, 0)); }
bool r_vowel(std::string_view s) { return at(s, 0) == 'r' && vowel(at(s, 1)); }
bool n_vowel(std::string_view s) { return at(s, 0) == 'n' && vowel(at(s, 1)); }
bool t_vowel(std::string_view s) { return at(s, 0) == 't' && vowel(at(s, 1)); }
bool s_vowel(std::string_view s) { return at(s, 0) == 's' && vowel(at(s, 1)); }
bool k_vowel(std::string_view s) { return at(s, 0) == 'k' && vowel(at(s, 1)); }
bool l_vowel(std::string_view s) { return at(s, 0) == 'l' && vowel(at(s, 1)); }
bool w_vowel(std::string_view s) { return at(s, 0) == 'w' && vowel(at(s, 1)); }
bool m_vowel(std::string_view s) { return at(s, 0) == 'm' && vowel(at(s, 1)); }
bool j_vowel(std::string_view s) { return at(s, 0) == 'j' && vowel(at(s, 1)); }
bool starts_ajar(std::string_view s) { return s.starts_with("ajar"); }
bool starts_pe(std::string_view s) { return s.starts_with("pe"); }

// CAP... where C != 'r' and P != "er"
bool cap_not_er(std::string_view s) {
  return consonant(at(s, 0)) && at(s, 0) != 'r' && letter(at(s, 1)) && s.size() >= 3 &&
         !frag_is(s, 2, "er");
}
// CAerV... where C != 'r'
bool caerv(std::string_view s) {
  return consonant(at(s, 0)) && at(s, 0) != 'r' && letter(at(s, 1)) && frag_is(s, 2, "er") &&
         vowel(at(s, 4));
}
// C1erC2... where C1 not in {r, l}
bool c1erc2(std::string_view s) {
  return consonant(at(s, 0)) && !one_of(at(s, 0), "rl") && frag_is(s, 1, "er") &&
         consonant(at(s, 3));
}
// CerV... where C != 'r'
bool cerv(std::string_view s) {
  return consonant(at(s, 0)) && at(s, 0) != 'r' && frag_is(s, 1, "er") && vowel(at(s, 3));
}
// CP...
bool cp(std::string_view s) { return consonant(at(s, 0)) && s.size() >= 2; }

bool lrwy_vowel(std::string_view s) { return one_of(at(s, 0), "lrwy") && vowel(at(s, 1)); }
bool bfv(std::string_view s) { return one_of(at(s, 0), "bfv"); }
bool bf(std::string_view s) { return one_of(at(s, 0), "bf"); }
bool cdjz(std::string_view s) { return one_of(at(s, 0), "cdjz"); }
bool cd(std::string_view s) { return one_of(at(s, 0), "cd"); }
bool ghqk(std::string_view s) { return one_of(at(s, 0), "ghqk"); }
bool ghk(std::string_view s) { return one_of(at(s, 0), "ghk"); }
// m{rV|V}...
bool m_rv_or_v(std::string_view s) {
  return at(s, 0) == 'm' && (vowel(at(s, 1)) || (at(s, 1) == 'r' && vowel(at(s, 2))));
}
bool p_r_vowel(std::string_view s) {
  return at(s, 0) == 'p' && at(s, 1) == 'r' && vowel(at(s, 2));
}
bool p_vowel(std::string_view s) { return at(s, 0) == 'p' && vowel(at(s, 1)); }
bool p_vowel_not_e(std::string_view s) { return p_vowel(s) && at(s, 1) != 'e'; }

constexpr std::string_view kKRetaining[] = {
    "kaji", "kalkulasi", "kampanye", "kategori", "komunikasi", "konsumsi", "kontribusi",
    "koordinasi",
};

bool retains_k(std::string_view stem) {
  return std::any_of(std::begin(kKRetaining), std::end(kKRetaining),
                     [&](std::string_view r) { return stem.starts_with(r); });
}

// me~pe... only realizes a pe-/per- prefixed stem; root-initial p elides (memerkosa).
bool inner_is_pe(std::string_view, std::optional<Prefix> inner) {
  return inner == Prefix::pe || inner == Prefix::per;
}
bool meng_keeps_stem(std::string_view stem, std::optional<Prefix>) {
  return !k_vowel(stem) || retains_k(stem);
}
bool meng_drops_k(std::string_view stem, std::optional<Prefix>) { return !retains_k(stem); }

using P = Prefix;

// Strip order: table order.
constexpr PrefixRule kRules[] = {
    // ber~ / ter~
    {{P::ber, 1, ""}, P::ber, "ber~V...", "ber", "", starts_vowel, nullptr, "berarti -> ber~ arti"},
    {{P::ber, 1, "rV"}, P::ber, "be~rV...", "be", "", r_vowel, nullptr, "berencana -> ber~ rencana"},
    {{P::ber, 2, ""}, P::ber, "ber~CAP... C!='r', P!='er'", "ber", "", cap_not_er, nullptr,
     "berhasil -> ber~ hasil"},
    {{P::ber, 3, ""}, P::ber, "ber~CAerV... C!='r'", "ber", "", caerv, nullptr,
     "berdaerah -> ber~ daerah"},
    {{P::ber, 4, ""}, P::ber, "bel~ajar...", "bel", "", starts_ajar, nullptr, "belajar -> ber~ ajar"},
    {{P::ber, 5, ""}, P::ber, "be~C1erC2... C1 not in {r,l}", "be", "", c1erc2, nullptr,
     "beterbangan -> ber~ terbang ~an"},
    {{P::ter, 6, ""}, P::ter, "te~rV...", "te", "", r_vowel, nullptr, "terendah -> ter~ rendah"},
    {{P::ter, 7, ""}, P::ter, "ter~CerV... C!='r'", "ter", "", cerv, nullptr,
     "terjerumus -> ter~ jerumus"},
    {{P::ter, 8, ""}, P::ter, "ter~CP...", "ter", "", cp, nullptr, "tersisa -> ter~ sisa"},
    // me~
    {{P::me, 1, ""}, P::me, "me~{l|r|w|y}V...", "me", "", lrwy_vowel, nullptr, "meraih -> me~ raih"},
    {{P::me, 2, ""}, P::me, "mem~{b|f|v}...", "mem", "", bfv, nullptr,
     "membedakan -> me~ beda ~kan"},
    {{P::me, 3, ""}, P::me, "mem~pe...", "mem", "", starts_pe, inner_is_pe,
     "mempertahankan -> me~ per~ tahan ~kan"},
    {{P::me, 4, "mV"}, P::me, "me~m{rV|V}...", "me", "", m_rv_or_v, nullptr, "memakan -> me~ makan"},
    {{P::me, 4, "prV"}, P::me, "me~p{rV}...", "mem", "", p_r_vowel, nullptr,
     "memprakarsai -> me~ prakarsa ~i"},
    {{P::me, 4, ""}, P::me, "me~p{V}...", "mem", "p", p_vowel, nullptr, "memukul -> me~ pukul"},
    {{P::me, 5, ""}, P::me, "men~{c|d|j|z}...", "men", "", cdjz, nullptr, "mencoba -> me~ coba"},
    {{P::me, 6, ""}, P::me, "me~tV...", "men", "t", t_vowel, nullptr, "menulis -> me~ tulis"},
    {{P::me, 6, "nV"}, P::me, "me~nV...", "me", "", n_vowel, nullptr, "menilai -> me~ nilai"},
    {{P::me, 7, ""}, P::me, "meng~{g|h|q|k}...", "meng", "", ghqk, meng_keeps_stem,
     "mengkalkulasi -> me~ kalkulasi"},
    {{P::me, 8, ""}, P::me, "meng~V...", "meng", "", starts_vowel, nullptr,
     "menganggap -> me~ anggap"},
    {{P::me, 8, "kV"}, P::me, "meng~kV...", "meng", "k", k_vowel, meng_drops_k,
     "mengasihi -> me~ kasih ~i"},
    {{P::me, 9, ""}, P::me, "meny~sV...", "meny", "s", s_vowel, nullptr,
     "menyelamatkan -> me~ selamat ~kan"},
    {{P::me, 10, ""}, P::me, "mem~pV... V!='e'", "mem", "p", p_vowel_not_e, nullptr,
     "memikirkan -> me~ pikir ~kan"},
    // pe~ / per~
    {{P::pe, 1, ""}, P::pe, "pe~{w}V...", "pe", "", w_vowel, nullptr, "pewakaf -> pe~ wakaf"},
    {{P::pe, 2, ""}, P::per, "per~V...", "per", "", starts_vowel, nullptr,
     "perairan -> per~ air ~an"},
    {{P::pe, 2, "rV"}, P::pe, "pe~rV...", "pe", "", r_vowel, nullptr, "peraih -> pe~ raih"},
    {{P::pe, 3, ""}, P::per, "per~CAP... C!='r', P!='er'", "per", "", cap_not_er, nullptr,
     "perbuatannya -> per~ buat ~an ~nya"},
    {{P::pe, 4, ""}, P::pe, "pem~{b|f}...", "pem", "", bf, nullptr,
     "pembunuhan -> pe~ bunuh ~an"},
    {{P::pe, 5, ""}, P::pe, "pen~{c|d}...", "pen", "", cd, nullptr, "pendidik -> pe~ didik"},
    {{P::pe, 6, ""}, P::pe, "pe~tV...", "pen", "t", t_vowel, nullptr, "penabur -> pe~ tabur"},
    {{P::pe, 6, "nV"}, P::pe, "pe~nV...", "pe", "", n_vowel, nullptr, "penasehat -> pe~ nasehat"},
    {{P::pe, 7, ""}, P::pe, "peng~{g|h|k}...", "peng", "", ghk, nullptr,
     "penghargaan -> pe~ harga ~an"},
    {{P::pe, 8, ""}, P::pe, "peng~V...", "peng", "", starts_vowel, nullptr,
     "pengakuan -> pe~ aku ~an"},
    {{P::pe, 9, ""}, P::pe, "penye~sV...", "peny", "s", s_vowel, nullptr,
     "penyesalan -> pe~ sesal ~an"},
    {{P::pe, 10, ""}, P::pe, "pe~lV...", "pe", "", l_vowel, nullptr, "pelumas -> pe~ lumas"},
    {{P::pe, 10, "ajar"}, P::pe, "pel~ajar...", "pel", "", starts_ajar, nullptr,
     "pelajar -> pe~ ajar"},
    {{P::pe, 11, "mV"}, P::pe, "pe~mV...", "pe", "", m_vowel, nullptr, "pemakan -> pe~ makan",
     true},
    {{P::pe, 11, "jV"}, P::pe, "pe~jV...", "pe", "", j_vowel, nullptr, "pejalan -> pe~ jalan",
     true},
    // shape-preserving
    {{P::di, 1, ""}, P::di, "di~A...", "di", "", any_letter, nullptr, "dimakan -> di~ makan"},
    {{P::ke, 1, ""}, P::ke, "ke~A...", "ke", "", any_letter, nullptr, "kebutuhan -> ke~ butuh ~an"},
    {{P::se, 1, ""}, P::se, "se~A...", "se", "", any_letter, nullptr, "sejalan -> se~ jalan"},
};

constexpr std::size_t kRuleCount = std::size(kRules);

constexpr std::size_t index_of(RuleId id) {
  for (std::size_t i = 0; i < kRuleCount; ++i)
    if (kRules[i].id.affix == id.affix && kRules[i].id.ordinal == id.ordinal &&
        kRules[i].id.variant == id.variant)
      return i;
  return kRuleCount;
}

struct GenerationOrder {
  Prefix prefix;
  std::array<std::size_t, 16> rules;
  std::size_t count;
};

template <std::size_t N>
constexpr GenerationOrder order(Prefix p, const RuleId (&ids)[N]) {
  GenerationOrder g{p, {}, N};
  for (std::size_t i = 0; i < N; ++i) g.rules[i] = index_of(ids[i]);
  return g;
}

// Most specific rule first; the first rule whose shape and guard accept the stem wins.
constexpr RuleId kBerOrder[] = {{P::ber, 4, ""}, {P::ber, 1, "rV"}, {P::ber, 1, ""},
                                {P::ber, 5, ""}, {P::ber, 3, ""},   {P::ber, 2, ""}};
constexpr RuleId kTerOrder[] = {{P::ter, 6, ""}, {P::ter, 7, ""}, {P::ter, 8, ""}};
constexpr RuleId kMeOrder[] = {{P::me, 3, ""},   {P::me, 1, ""},   {P::me, 2, ""},
                               {P::me, 4, "mV"}, {P::me, 4, "prV"}, {P::me, 10, ""},
                               {P::me, 4, ""},   {P::me, 5, ""},   {P::me, 6, "nV"},
                               {P::me, 6, ""},   {P::me, 7, ""},   {P::me, 8, "kV"},
                               {P::me, 8, ""},   {P::me, 9, ""}};
constexpr RuleId kPeOrder[] = {{P::pe, 10, "ajar"}, {P::pe, 1, ""},    {P::pe, 2, "rV"},
                               {P::pe, 4, ""},      {P::pe, 5, ""},    {P::pe, 6, "nV"},
                               {P::pe, 6, ""},      {P::pe, 7, ""},    {P::pe, 8, ""},
                               {P::pe, 9, ""},      {P::pe, 10, ""},   {P::pe, 11, "mV"},
                               {P::pe, 11, "jV"}};
constexpr RuleId kPerOrder[] = {{P::pe, 2, ""}, {P::pe, 3, ""}};
constexpr RuleId kDiOrder[] = {{P::di, 1, ""}};
constexpr RuleId kKeOrder[] = {{P::ke, 1, ""}};
constexpr RuleId kSeOrder[] = {{P::se, 1, ""}};

constexpr GenerationOrder kGeneration[] = {
    order(P::me, kMeOrder), order(P::ber, kBerOrder), order(P::ter, kTerOrder),
    order(P::di, kDiOrder), order(P::ke, kKeOrder),   order(P::se, kSeOrder),
    order(P::pe, kPeOrder), order(P::per, kPerOrder),
};

constexpr bool generation_tables_valid() {
  for (const auto& g : kGeneration)
    for (std::size_t i = 0; i < g.count; ++i)
      if (g.rules[i] >= kRuleCount || kRules[g.rules[i]].prefix != g.prefix) return false;
  return true;
}
static_assert(generation_tables_valid(), "generation order references an unknown rule");

const GenerationOrder& generation_order(Prefix p) {
  for (const auto& g : kGeneration)
    if (g.prefix == p) return g;
  return kGeneration[0];  // unreachable: every prefix has an entry
}

std::vector<CombinationConstraint> make_constraints() {
  using S = DerivSuffix;
  return {
      {P::ber, {S::i}, false}, {P::di, {S::an}, false}, {P::ke, {S::i, S::kan}, false},
      {P::me, {S::an}, false}, {P::ter, {S::an}, false}, {P::per, {S::an}, true},
  };
}

}  // namespace

std::span<const PrefixRule> prefix_rules() { return kRules; }

std::span<const std::string_view> k_retaining_roots() { return kKRetaining; }

std::vector<PrefixStrip> strip_prefix_candidates(std::string_view surface) {
  std::vector<PrefixStrip> out;
  if (!is_lower_word(surface)) return out;
  for (const auto& rule : kRules) {
    if (!surface.starts_with(rule.surface) || surface.size() == rule.surface.size()) continue;
    std::string remainder(rule.restore);
    remainder.append(surface.substr(rule.surface.size()));
    if (remainder.size() >= surface.size() || !rule.matches(remainder)) continue;
    PrefixStrip strip{rule.prefix, std::move(remainder), rule.id};
    if (std::find(out.begin(), out.end(), strip) == out.end()) out.push_back(std::move(strip));
  }
  return out;
}

std::vector<SuffixChain> strip_suffix_chain(std::string_view surface) {
  std::vector<SuffixChain> out;
  if (!is_lower_word(surface)) {
    out.push_back({std::string(surface), {}, {}, {}});
    return out;
  }
  std::vector<std::pair<std::string_view, std::optional<Particle>>> after_p{{surface, {}}};
  for (auto p : kAllParticles)
    if (surface.size() > name(p).size() && surface.ends_with(name(p)))
      after_p.emplace_back(surface.substr(0, surface.size() - name(p).size()), p);

  for (const auto& [s1, p] : after_p) {
    std::vector<std::pair<std::string_view, std::optional<Possessive>>> after_pp{{s1, {}}};
    for (auto pp : kAllPossessives)
      if (s1.size() > name(pp).size() && s1.ends_with(name(pp)))
        after_pp.emplace_back(s1.substr(0, s1.size() - name(pp).size()), pp);

    for (const auto& [s2, pp] : after_pp) {
      out.push_back({std::string(s2), std::nullopt, pp, p});
      for (auto ds : kAllDerivSuffixes)
        if (s2.size() > name(ds).size() && s2.ends_with(name(ds)))
          out.push_back({std::string(s2.substr(0, s2.size() - name(ds).size())), ds, pp, p});
    }
  }
  return out;
}

std::span<const CombinationConstraint> combination_constraints() {
  static const std::vector<CombinationConstraint> constraints = make_constraints();
  return constraints;
}

bool is_allowed(std::span<const Prefix> prefixes, std::optional<DerivSuffix> ds) {
  if (!ds) return true;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    for (const auto& c : combination_constraints()) {
      if (c.prefix != prefixes[i] || (c.inner_only && i == 0)) continue;
      if (std::find(c.disallowed.begin(), c.disallowed.end(), *ds) != c.disallowed.end())
        return false;
    }
  }
  return true;
}

const PrefixRule& generation_rule(Prefix prefix, std::string_view stem,
                                  std::optional<Prefix> inner) {
  if (is_lower_word(stem)) {
    const auto& g = generation_order(prefix);
    for (std::size_t i = 0; i < g.count; ++i) {
      const PrefixRule& rule = kRules[g.rules[i]];
      if (!stem.starts_with(rule.restore) || !rule.matches(stem)) continue;
      if (rule.generation_guard && !rule.generation_guard(stem, inner)) continue;
      return rule;
    }
  }
  throw NoGenerationRule(std::string(name(prefix)), std::string(stem));
}

std::string generate_prefix(Prefix prefix, std::string_view stem, std::optional<Prefix> inner) {
  const PrefixRule& rule = generation_rule(prefix, stem, inner);
  std::string out(rule.surface);
  out.append(stem.substr(rule.restore.size()));
  return out;
}

void dump_rules(std::ostream& out) {
  out << "# prefix rules (strip order)\n";
  out << "id\tprefix\tpattern\tsurface\trestore\texample\n";
  for (const auto& r : kRules) {
    out << r.id.str() << '\t' << name(r.prefix) << '\t' << r.pattern << '\t' << r.surface
        << '\t' << (r.restore.empty() ? "-" : r.restore) << '\t' << r.example
        << (r.supplementary ? "\t(supplementary)" : "") << '\n';
  }
  out << "\n# generation order\n";
  for (const auto& g : kGeneration) {
    out << name(g.prefix) << '\t';
    for (std::size_t i = 0; i < g.count; ++i)
      out << (i ? " " : "") << kRules[g.rules[i]].id.str();
    out << '\n';
  }
  out << "\n# k-retaining roots (meng~)\n";
  for (std::size_t i = 0; i < std::size(kKRetaining); ++i)
    out << (i ? " " : "") << kKRetaining[i];
  out << '\n';
  out << "\n# disallowed combinations\n";
  out << "prefix\tdisallowed\tposition\n";
  for (const auto& c : combination_constraints()) {
    out << name(c.prefix) << '\t';
    for (std::size_t i = 0; i < c.disallowed.size(); ++i)
      out << (i ? "," : "") << '~' << name(c.disallowed[i]);
    out << '\t' << (c.inner_only ? "inner" : "any") << '\n';
  }
}

}  // namespace morfo
