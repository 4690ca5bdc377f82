#include "mpp/document.hpp"

#include "mpp/ehrhart.hpp"
#include "mpp/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mpp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw Error(ErrorKind::ParseError, what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            fail("unknown field '" + key + "' in " + where);
}

std::vector<ElementId> id_list(const json& j, const std::string& what)
{
    if (!j.is_array())
        fail(what + " must be an array of strings");
    std::vector<ElementId> out;
    for (const auto& item : j) {
        if (!item.is_string())
            fail(what + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Rational parse_mark(const json& j, const std::string& id)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    fail("mark of '" + id + "' must be an integer or a \"num/den\" string");
}

}  // namespace

PosetDocument parse_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        fail("document must be a JSON object");
    reject_unknown(root, {"name", "elements", "covers", "marked", "partition"}, "document");
    for (const char* key : {"elements", "covers", "marked"})
        if (!root.contains(key))
            fail(std::string("missing field '") + key + "'");

    PosetDocument doc;
    if (root.contains("name")) {
        if (!root["name"].is_string())
            fail("name must be a string");
        doc.name = root["name"].get<std::string>();
    }
    doc.elements = id_list(root["elements"], "elements");
    if (!root["covers"].is_array())
        fail("covers must be an array of [p, q] pairs");
    for (const auto& c : root["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            fail("covers must be an array of [p, q] pairs");
        doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    if (!root["marked"].is_object())
        fail("marked must be an object mapping ids to marks");
    for (const auto& [id, value] : root["marked"].items())
        doc.marked.emplace(id, parse_mark(value, id));
    if (root.contains("partition")) {
        const json& part = root["partition"];
        if (!part.is_object())
            fail("partition must be an object");
        reject_unknown(part, {"chain", "order"}, "partition");
        doc.partition.emplace(part.contains("chain") ? id_list(part["chain"], "partition.chain")
                                                     : std::vector<ElementId>{},
                              part.contains("order") ? id_list(part["order"], "partition.order")
                                                     : std::vector<ElementId>{});
    }
    return doc;
}

PosetDocument read_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

json to_json(const PosetDocument& doc)
{
    json out;
    out["name"] = doc.name;
    out["elements"] = doc.elements;
    out["covers"] = json::array();
    for (const auto& [p, q] : doc.covers)
        out["covers"].push_back({p, q});
    out["marked"] = json::object();
    for (const auto& [id, mark] : doc.marked)
        out["marked"][id] = to_fraction_string(mark);
    if (doc.partition)
        out["partition"] = {{"chain", doc.partition->first}, {"order", doc.partition->second}};
    return out;
}

MarkedPoset to_marked_poset(const PosetDocument& doc)
{
    return MarkedPoset(Poset(doc.elements, doc.covers), doc.marked);
}

std::optional<ChainOrderPartition> to_partition(const PosetDocument& doc, const MarkedPoset& mp)
{
    if (!doc.partition)
        return std::nullopt;
    return make_partition(mp, doc.partition->first, doc.partition->second);
}

PosetDocument make_document(const MarkedPoset& mp, std::string name)
{
    PosetDocument doc;
    doc.name = std::move(name);
    const Poset& P = mp.poset();
    doc.elements = P.ids();
    for (const auto& [p, q] : P.covers())
        doc.covers.emplace_back(P.id(p), P.id(q));
    doc.marked = mp.marking();
    return doc;
}

namespace {

std::vector<long> parse_params(std::string_view text, std::size_t count, std::string_view spec)
{
    std::vector<long> out;
    std::string buffer(text);
    std::stringstream ss(buffer);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail("bad parameter '" + item + "' in builtin '" + std::string(spec) + "'");
        }
    }
    if (out.size() != count)
        fail("builtin '" + std::string(spec) + "' expects " + std::to_string(count) + " parameters");
    return out;
}

}  // namespace

PosetDocument builtin_document(std::string_view spec)
{
    std::string_view head = spec.substr(0, spec.find(':'));
    std::string_view rest = spec.find(':') == std::string_view::npos ? "" : spec.substr(spec.find(':') + 1);
    if (head == "two-chains") {
        PosetDocument doc;
        doc.name = "two-chains";
        doc.elements = {"m1", "m2l", "m2r", "m3", "x1", "x2"};
        doc.covers = {{"m1", "x1"}, {"x1", "m2r"}, {"x1", "x2"}, {"m2l", "x2"}, {"x2", "m3"}};
        doc.marked = {{"m1", 1}, {"m2l", 2}, {"m2r", 2}, {"m3", 3}};
        return doc;
    }
    if (head == "pm") {
        auto p = parse_params(rest, 2, spec);
        try {
            return make_document(pm_family(static_cast<int>(p[0]), static_cast<int>(p[1])), std::string(spec));
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    if (head == "diamond") {
        auto p = parse_params(rest, 2, spec);
        PosetDocument doc;
        doc.name = std::string(spec);
        doc.elements = {"a", "b", "x", "y"};
        doc.covers = {{"a", "x"}, {"a", "y"}, {"x", "b"}, {"y", "b"}};
        doc.marked = {{"a", p[0]}, {"b", p[1]}};
        return doc;
    }
    fail("unknown builtin '" + std::string(spec) + "' (expected pm:m,c, two-chains or diamond:lo,hi)");
}

std::string format_hrep(const HRepresentation& h)
{
    HRepresentation sorted = h;
    sorted.sort();
    std::ostringstream os;
    os << "coords:";
    for (const auto& c : sorted.coordinates())
        os << ' ' << c;
    os << '\n';
    auto row = [&](const LinearInequality& r, const char* rel) {
        for (const auto& c : r.coeffs)
            os << to_string(c) << ' ';
        os << rel << ' ' << to_string(r.rhs) << '\n';
    };
    for (const auto& r : sorted.inequalities())
        row(r, "<=");
    for (const auto& r : sorted.equalities())
        row(r, "=");
    return os.str();
}

HRepresentation parse_hrep(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<HRepresentation> h;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = line.substr(0, line.find('#'));
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty())
            continue;
        if (!h) {
            if (words.front() != "coords:")
                fail("line " + std::to_string(line_no) + ": expected 'coords:' header");
            h.emplace(std::vector<std::string>(words.begin() + 1, words.end()));
            continue;
        }
        const std::size_t d = h->ambient_dimension();
        if (words.size() != d + 2 || (words[d] != "<=" && words[d] != "="))
            fail("line " + std::to_string(line_no) + ": expected " + std::to_string(d) +
                 " coefficients, '<=' or '=', and a right side");
        std::vector<Rational> coeffs;
        for (std::size_t j = 0; j < d; ++j)
            coeffs.push_back(parse_rational(words[j]));
        Rational rhs = parse_rational(words[d + 1]);
        try {
            if (words[d] == "<=")
                h->add_inequality(std::move(coeffs), std::move(rhs));
            else
                h->add_equality(std::move(coeffs), std::move(rhs));
        } catch (const Error& e) {
            fail("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!h)
        fail("missing 'coords:' header");
    return *h;
}

}  // namespace mpp
