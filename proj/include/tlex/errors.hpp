#ifndef TLEX_ERRORS_HPP
#define TLEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlex {

// Base class for all tlex failures that carry structured context.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A link references a node id that is not declared in the document.
class DanglingEndpointError : public Error {
public:
    DanglingEndpointError(const std::string& link_id, const std::string& node_id)
        : Error("dangling endpoint: link " + link_id + " references unknown node " + node_id),
          link_id(link_id), node_id(node_id) {}
    std::string link_id;
    std::string node_id;
};

// Two or more TLINKs (or ALINKs) with different relations between one ordered pair.
class DuplicateLinkError : public Error {
public:
    DuplicateLinkError(const std::string& source, const std::string& target,
                       const std::string& detail)
        : Error("duplicate link between " + source + " and " + target + ": " + detail),
          source(source), target(target) {}
    std::string source;
    std::string target;
};

// SLINK or ALINK with a time expression as an endpoint.
class SlinkOnTimexError : public Error {
public:
    SlinkOnTimexError(const std::string& link_id, const std::string& node_id)
        : Error("link " + link_id + " must connect two events, but " + node_id +
                " is a time expression"),
          link_id(link_id), node_id(node_id) {}
    std::string link_id;
    std::string node_id;
};

class XmlMalformedError : public Error {
public:
    XmlMalformedError(std::size_t byte_position, const std::string& detail)
        : Error("malformed XML at byte " + std::to_string(byte_position) + ": " + detail),
          byte_position(byte_position) {}
    std::size_t byte_position;
};

class UnresolvedReferenceError : public Error {
public:
    UnresolvedReferenceError(const std::string& attribute, const std::string& value)
        : Error("attribute " + attribute + " references undeclared id \"" + value + "\""),
          attribute(attribute), value(value) {}
    std::string attribute;
    std::string value;
};

class UnknownRelTypeError : public Error {
public:
    UnknownRelTypeError(const std::string& link_id, const std::string& rel_type)
        : Error("link " + link_id + " has unknown relType \"" + rel_type + "\""),
          link_id(link_id), rel_type(rel_type) {}
    std::string link_id;
    std::string rel_type;
};

// Raised by the scheduler if a vertex remains but none has in-degree zero,
// i.e. the caller skipped consistency checking.
class CycleDetectedError : public Error {
public:
    explicit CycleDetectedError(const std::string& detail)
        : Error("cycle detected in supposedly acyclic graph: " + detail) {}
};

// A brute-force oracle was asked to search beyond its budget.
class TooLargeError : public Error {
public:
    TooLargeError(std::size_t size, std::size_t limit)
        : Error("input size " + std::to_string(size) + " exceeds oracle budget " +
                std::to_string(limit)),
          size(size), limit(limit) {}
    std::size_t size;
    std::size_t limit;
};

class AnchorUnknownError : public Error {
public:
    explicit AnchorUnknownError(const std::string& node_id)
        : Error("anchor node " + node_id + " does not occur in the graph"), node_id(node_id) {}
    std::string node_id;
};

class MissingTimelineError : public Error {
public:
    explicit MissingTimelineError(std::size_t subgraph_id)
        : Error("no timeline was supplied for subgraph " + std::to_string(subgraph_id)),
          subgraph_id(subgraph_id) {}
    std::size_t subgraph_id;
};

} // namespace tlex

#endif
