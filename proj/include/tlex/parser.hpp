#ifndef TLEX_PARSER_HPP
#define TLEX_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tlex/model.hpp"

namespace tlex {

// Raw parse of one TimeML document (TimeBank 1.2 dialect and compatible),
// before instance resolution.
struct TimeMLDocument {
    std::string doc_id;
    std::string raw_text; // tag-stripped character data, in document order

    struct Event {
        std::string eid;
        std::string text;
        std::size_t char_offset = 0;
        bool operator==(const Event&) const = default;
    };
    struct Instance {
        std::string eiid;
        std::string eid;
        bool operator==(const Instance&) const = default;
    };
    struct Timex {
        std::string tid;
        TimexClass timex_class = TimexClass::Date;
        std::string text;
        std::size_t char_offset = 0;
        bool operator==(const Timex&) const = default;
    };

    std::vector<Event> events;
    std::vector<Instance> instances;
    std::vector<Timex> timexes;
    std::vector<TimeMLLink> raw_links; // endpoints still unresolved ids

    bool operator==(const TimeMLDocument&) const = default;
};

// Parses TimeML XML. Extracts EVENT, MAKEINSTANCE, TIMEX3, TLINK, SLINK and
// ALINK elements; entity offsets are byte positions in the tag-stripped text.
// fallback_doc_id is used when the document carries no DOCID element.
//
// Throws XmlMalformedError, UnknownRelTypeError, UnresolvedReferenceError.
TimeMLDocument parse_document(std::string_view xml, std::string fallback_doc_id = "");

// Maps instances and time expressions to graph entities and delegates
// validation to build_graph. Events without a MAKEINSTANCE get a synthesized
// instance id deterministic in the event id ("ei-auto-<eid>"); links that
// reference an event id instead of an instance id resolve through the
// event's first instance, with a warning.
TimeMLGraph resolve_graph(const TimeMLDocument& doc, const GraphOptions& options = {});

// Convenience: parse_document + resolve_graph on a file's contents.
TimeMLGraph parse_file(const std::string& path, const GraphOptions& options = {});

} // namespace tlex

#endif
