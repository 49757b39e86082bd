#include "tlex/parser.hpp"

#include <expat.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tlex/errors.hpp"

namespace tlex {

namespace {

std::string upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

struct ParseContext {
    TimeMLDocument doc;
    XML_Parser parser = nullptr;
    std::exception_ptr failure;

    // Open entity spans, so nested elements still accumulate their text.
    struct OpenSpan {
        enum class Kind { Event, Timex, DocId } kind;
        std::size_t item_index = 0; // into doc.events / doc.timexes
        std::size_t text_start = 0;
    };
    std::vector<OpenSpan> open_spans;
    std::string docid_text;
    std::size_t synthetic_lid = 0;

    void fail(std::exception_ptr error) {
        if (!failure) failure = std::move(error);
        XML_StopParser(parser, XML_FALSE);
    }

    const char* attr(const char** attrs, const char* name) const {
        for (std::size_t i = 0; attrs[i]; i += 2) {
            if (std::strcmp(attrs[i], name) == 0) return attrs[i + 1];
        }
        return nullptr;
    }

    std::string lid_or_synthesized(const char** attrs) {
        if (const char* lid = attr(attrs, "lid")) return lid;
        return "l-auto-" + std::to_string(++synthetic_lid);
    }

    void open_element(const char* name, const char** attrs) {
        const std::string tag = upper(name);
        if (tag == "EVENT") {
            TimeMLDocument::Event event;
            if (const char* eid = attr(attrs, "eid")) event.eid = eid;
            event.char_offset = doc.raw_text.size();
            doc.events.push_back(std::move(event));
            open_spans.push_back(
                {OpenSpan::Kind::Event, doc.events.size() - 1, doc.raw_text.size()});
        } else if (tag == "TIMEX3") {
            TimeMLDocument::Timex timex;
            if (const char* tid = attr(attrs, "tid")) timex.tid = tid;
            if (const char* type = attr(attrs, "type")) {
                timex.timex_class = parse_timex_class(type).value_or(TimexClass::Date);
            }
            timex.char_offset = doc.raw_text.size();
            doc.timexes.push_back(std::move(timex));
            open_spans.push_back(
                {OpenSpan::Kind::Timex, doc.timexes.size() - 1, doc.raw_text.size()});
        } else if (tag == "MAKEINSTANCE") {
            TimeMLDocument::Instance instance;
            if (const char* eiid = attr(attrs, "eiid")) instance.eiid = eiid;
            if (const char* eid = attr(attrs, "eventID")) instance.eid = eid;
            doc.instances.push_back(std::move(instance));
        } else if (tag == "TLINK" || tag == "SLINK" || tag == "ALINK") {
            open_link(tag, attrs);
        } else if (tag == "DOCID" || tag == "DOCNO") {
            open_spans.push_back({OpenSpan::Kind::DocId, 0, doc.raw_text.size()});
        }
    }

    void open_link(const std::string& tag, const char** attrs) {
        const LinkKind kind = tag == "TLINK"   ? LinkKind::Tlink
                              : tag == "SLINK" ? LinkKind::Slink
                                               : LinkKind::Alink;
        TimeMLLink link;
        link.link_id = lid_or_synthesized(attrs);

        const char* rel_type = attr(attrs, "relType");
        if (!rel_type) throw UnknownRelTypeError(link.link_id, "(missing relType)");
        const auto rel = parse_rel(kind, rel_type);
        if (!rel) throw UnknownRelTypeError(link.link_id, rel_type);
        link.rel = *rel;

        if (const char* id = attr(attrs, "eventInstanceID")) {
            link.source = {NodeKind::EventInstance, id};
        } else if (const char* tid = attr(attrs, "timeID")) {
            link.source = {NodeKind::Timex, tid};
        } else {
            throw UnresolvedReferenceError("eventInstanceID/timeID on " + link.link_id,
                                           "(missing)");
        }

        if (const char* id = attr(attrs, "relatedToEventInstance")) {
            link.target = {NodeKind::EventInstance, id};
        } else if (const char* id = attr(attrs, "subordinatedEventInstance")) {
            link.target = {NodeKind::EventInstance, id};
        } else if (const char* tid = attr(attrs, "relatedToTime")) {
            link.target = {NodeKind::Timex, tid};
        } else {
            throw UnresolvedReferenceError(
                "relatedToEventInstance/subordinatedEventInstance/relatedToTime on " +
                    link.link_id,
                "(missing)");
        }
        doc.raw_links.push_back(std::move(link));
    }

    void close_element(const char* name) {
        const std::string tag = upper(name);
        if (open_spans.empty()) return;
        const OpenSpan span = open_spans.back();
        if ((tag == "EVENT" && span.kind == OpenSpan::Kind::Event) ||
            (tag == "TIMEX3" && span.kind == OpenSpan::Kind::Timex) ||
            ((tag == "DOCID" || tag == "DOCNO") && span.kind == OpenSpan::Kind::DocId)) {
            const std::string text = doc.raw_text.substr(span.text_start);
            switch (span.kind) {
            case OpenSpan::Kind::Event: doc.events[span.item_index].text = text; break;
            case OpenSpan::Kind::Timex: doc.timexes[span.item_index].text = text; break;
            case OpenSpan::Kind::DocId: docid_text = text; break;
            }
            open_spans.pop_back();
        }
    }
};

extern "C" {

void start_element(void* user_data, const XML_Char* name, const XML_Char** attrs) {
    auto* ctx = static_cast<ParseContext*>(user_data);
    try {
        ctx->open_element(name, attrs);
    } catch (...) {
        ctx->fail(std::current_exception());
    }
}

void end_element(void* user_data, const XML_Char* name) {
    auto* ctx = static_cast<ParseContext*>(user_data);
    try {
        ctx->close_element(name);
    } catch (...) {
        ctx->fail(std::current_exception());
    }
}

void character_data(void* user_data, const XML_Char* data, int length) {
    auto* ctx = static_cast<ParseContext*>(user_data);
    ctx->doc.raw_text.append(data, static_cast<std::size_t>(length));
}

} // extern "C"

void validate_references(const TimeMLDocument& doc) {
    std::set<std::string> eids, eiids, tids;
    for (const auto& event : doc.events) eids.insert(event.eid);
    for (const auto& timex : doc.timexes) tids.insert(timex.tid);
    for (const auto& instance : doc.instances) {
        if (!eids.count(instance.eid)) throw UnresolvedReferenceError("eventID", instance.eid);
        eiids.insert(instance.eiid);
    }
    for (const auto& link : doc.raw_links) {
        for (const NodeId* endpoint : {&link.source, &link.target}) {
            if (endpoint->kind == NodeKind::Timex) {
                if (!tids.count(endpoint->id)) {
                    throw UnresolvedReferenceError("timeID/relatedToTime on " + link.link_id,
                                                   endpoint->id);
                }
            } else if (!eiids.count(endpoint->id) && !eids.count(endpoint->id)) {
                throw UnresolvedReferenceError("event instance on " + link.link_id, endpoint->id);
            }
            // A bare event id passes validation; resolve_graph maps it to the
            // event's first instance and warns.
        }
    }
}

} // namespace

TimeMLDocument parse_document(std::string_view xml, std::string fallback_doc_id) {
    ParseContext ctx;
    XML_Parser parser = XML_ParserCreate(nullptr);
    ctx.parser = parser;
    XML_SetUserData(parser, &ctx);
    XML_SetElementHandler(parser, start_element, end_element);
    XML_SetCharacterDataHandler(parser, character_data);

    const XML_Status status =
        XML_Parse(parser, xml.data(), static_cast<int>(xml.size()), /*isFinal=*/XML_TRUE);
    const auto error_code = XML_GetErrorCode(parser);
    const std::size_t error_byte = static_cast<std::size_t>(XML_GetCurrentByteIndex(parser));
    XML_ParserFree(parser);

    if (ctx.failure) std::rethrow_exception(ctx.failure);
    if (status != XML_STATUS_OK) {
        throw XmlMalformedError(error_byte, XML_ErrorString(error_code));
    }

    std::string docid = ctx.docid_text;
    const auto first = docid.find_first_not_of(" \t\r\n");
    docid = first == std::string::npos ? "" : docid.substr(first, docid.find_last_not_of(" \t\r\n") - first + 1);
    ctx.doc.doc_id = !docid.empty() ? docid : std::move(fallback_doc_id);
    validate_references(ctx.doc);
    return std::move(ctx.doc);
}

TimeMLGraph resolve_graph(const TimeMLDocument& doc, const GraphOptions& options) {
    std::map<std::string, const TimeMLDocument::Event*> events_by_id;
    for (const auto& event : doc.events) events_by_id.emplace(event.eid, &event);

    // First declared instance per event, for resolving links that name the
    // event rather than an instance.
    std::map<std::string, std::string> first_instance;
    std::set<std::string> eiids;
    std::vector<TemporalEntity> entities;
    std::vector<std::string> warnings;

    for (const auto& instance : doc.instances) {
        const auto it = events_by_id.find(instance.eid);
        if (it == events_by_id.end()) throw UnresolvedReferenceError("eventID", instance.eid);
        first_instance.emplace(instance.eid, instance.eiid);
        eiids.insert(instance.eiid);
        entities.push_back({{NodeKind::EventInstance, instance.eiid}, it->second->text,
                            it->second->char_offset, std::nullopt});
    }
    for (const auto& event : doc.events) {
        if (first_instance.count(event.eid)) continue;
        const std::string eiid = "ei-auto-" + event.eid;
        first_instance.emplace(event.eid, eiid);
        eiids.insert(eiid);
        entities.push_back(
            {{NodeKind::EventInstance, eiid}, event.text, event.char_offset, std::nullopt});
    }
    for (const auto& timex : doc.timexes) {
        entities.push_back(
            {{NodeKind::Timex, timex.tid}, timex.text, timex.char_offset, timex.timex_class});
    }

    std::vector<TimeMLLink> links = doc.raw_links;
    for (auto& link : links) {
        for (NodeId* endpoint : {&link.source, &link.target}) {
            if (endpoint->kind != NodeKind::EventInstance) continue;
            if (eiids.count(endpoint->id)) continue;
            const auto it = first_instance.find(endpoint->id);
            if (it != first_instance.end()) {
                warnings.push_back("link " + link.link_id + " references event " + endpoint->id +
                                   "; resolved to instance " + it->second);
                endpoint->id = it->second;
            }
            // Unknown ids fall through to build_graph's DanglingEndpoint.
        }
    }

    TimeMLGraph graph = build_graph(std::move(entities), std::move(links), options);
    graph.warnings.insert(graph.warnings.begin(), warnings.begin(), warnings.end());
    return graph;
}

TimeMLGraph parse_file(const std::string& path, const GraphOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string fallback = path;
    if (const auto slash = fallback.find_last_of('/'); slash != std::string::npos) {
        fallback = fallback.substr(slash + 1);
    }
    if (const auto dot = fallback.find_last_of('.'); dot != std::string::npos) {
        fallback = fallback.substr(0, dot);
    }
    return resolve_graph(parse_document(buffer.str(), std::move(fallback)), options);
}

} // namespace tlex
