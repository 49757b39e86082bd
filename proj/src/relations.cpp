#include "tlex/relations.hpp"

#include <cctype>

namespace tlex {

std::string_view rel_name(TlinkRel rel) {
    switch (rel) {
    case TlinkRel::Before: return "before";
    case TlinkRel::After: return "after";
    case TlinkRel::IBefore: return "ibefore";
    case TlinkRel::IAfter: return "iafter";
    case TlinkRel::Begins: return "begins";
    case TlinkRel::BegunBy: return "begun_by";
    case TlinkRel::Ends: return "ends";
    case TlinkRel::EndedBy: return "ended_by";
    case TlinkRel::Includes: return "includes";
    case TlinkRel::IsIncluded: return "is_included";
    case TlinkRel::Simultaneous: return "simultaneous";
    case TlinkRel::Identity: return "identity";
    case TlinkRel::During: return "during";
    case TlinkRel::DuringInv: return "during_inv";
    }
    return "?";
}

std::string_view rel_name(SlinkRel rel) {
    switch (rel) {
    case SlinkRel::Modal: return "modal";
    case SlinkRel::Factive: return "factive";
    case SlinkRel::CounterFactive: return "counter_factive";
    case SlinkRel::Evidential: return "evidential";
    case SlinkRel::NegativeEvidential: return "negative_evidential";
    case SlinkRel::Conditional: return "conditional";
    }
    return "?";
}

std::string_view rel_name(AlinkRel rel) {
    switch (rel) {
    case AlinkRel::Initiates: return "initiates";
    case AlinkRel::Reinitiates: return "reinitiates";
    case AlinkRel::Terminates: return "terminates";
    case AlinkRel::Culminates: return "culminates";
    case AlinkRel::Continues: return "continues";
    }
    return "?";
}

LinkKind kind_of(const LinkRel& rel) {
    if (std::holds_alternative<TlinkRel>(rel)) return LinkKind::Tlink;
    if (std::holds_alternative<SlinkRel>(rel)) return LinkKind::Slink;
    return LinkKind::Alink;
}

std::string_view kind_name(LinkKind kind) {
    switch (kind) {
    case LinkKind::Tlink: return "TLINK";
    case LinkKind::Slink: return "SLINK";
    case LinkKind::Alink: return "ALINK";
    }
    return "?";
}

std::string rel_name(const LinkRel& rel) {
    return std::visit([](auto r) { return std::string(rel_name(r)); }, rel);
}

namespace {

// Folds case and drops underscores, the two axes of dialect drift seen
// across corpora ("IBEFORE" vs "I_BEFORE", "ENDED_BY" vs "ENDED-BY").
std::string normalize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '_' || c == '-') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

template <typename Rel, std::size_t N>
std::optional<LinkRel> lookup(const std::array<Rel, N>& rels, const std::string& key) {
    for (Rel r : rels) {
        if (normalize(rel_name(r)) == key) return LinkRel(r);
    }
    return std::nullopt;
}

} // namespace

std::optional<LinkRel> parse_rel(LinkKind kind, std::string_view text) {
    const std::string key = normalize(text);
    switch (kind) {
    case LinkKind::Tlink: return lookup(all_tlink_rels, key);
    case LinkKind::Slink: return lookup(all_slink_rels, key);
    case LinkKind::Alink: return lookup(all_alink_rels, key);
    }
    return std::nullopt;
}

} // namespace tlex
