#ifndef TLEX_RELATIONS_HPP
#define TLEX_RELATIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace tlex {

// The 14 temporal link relations.
enum class TlinkRel {
    Before,
    After,
    IBefore,
    IAfter,
    Begins,
    BegunBy,
    Ends,
    EndedBy,
    Includes,
    IsIncluded,
    Simultaneous,
    Identity,
    During,
    DuringInv,
};

// The 6 subordinating link relations.
enum class SlinkRel {
    Modal,
    Factive,
    CounterFactive,
    Evidential,
    NegativeEvidential,
    Conditional,
};

// The 5 aspectual link relations.
enum class AlinkRel {
    Initiates,
    Reinitiates,
    Terminates,
    Culminates,
    Continues,
};

inline constexpr std::size_t kTlinkCount = 14;
inline constexpr std::size_t kSlinkCount = 6;
inline constexpr std::size_t kAlinkCount = 5;

inline constexpr std::array<TlinkRel, kTlinkCount> all_tlink_rels = {
    TlinkRel::Before,       TlinkRel::After,   TlinkRel::IBefore,      TlinkRel::IAfter,
    TlinkRel::Begins,       TlinkRel::BegunBy, TlinkRel::Ends,         TlinkRel::EndedBy,
    TlinkRel::Includes,     TlinkRel::IsIncluded, TlinkRel::Simultaneous, TlinkRel::Identity,
    TlinkRel::During,       TlinkRel::DuringInv,
};

inline constexpr std::array<SlinkRel, kSlinkCount> all_slink_rels = {
    SlinkRel::Modal,      SlinkRel::Factive,            SlinkRel::CounterFactive,
    SlinkRel::Evidential, SlinkRel::NegativeEvidential, SlinkRel::Conditional,
};

inline constexpr std::array<AlinkRel, kAlinkCount> all_alink_rels = {
    AlinkRel::Initiates, AlinkRel::Reinitiates, AlinkRel::Terminates,
    AlinkRel::Culminates, AlinkRel::Continues,
};

// Canonical lower-case names, as used in JSON output and reports.
std::string_view rel_name(TlinkRel rel);
std::string_view rel_name(SlinkRel rel);
std::string_view rel_name(AlinkRel rel);

// A link relation of any of the three TimeML categories.
using LinkRel = std::variant<TlinkRel, SlinkRel, AlinkRel>;

enum class LinkKind { Tlink, Slink, Alink };

LinkKind kind_of(const LinkRel& rel);
std::string_view kind_name(LinkKind kind);
std::string rel_name(const LinkRel& rel);

// Parses a relType string for the given link element kind. Matching is
// case-insensitive and underscore-insensitive, so "IS_INCLUDED", "IsIncluded"
// and "ISINCLUDED" all resolve to the same relation. Returns nullopt for
// strings outside the kind's vocabulary.
std::optional<LinkRel> parse_rel(LinkKind kind, std::string_view text);

} // namespace tlex

#endif
