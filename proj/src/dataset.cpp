#include "socrec/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace socrec {
namespace {

constexpr const char* kShortHeader = "user_id,item_id,rating";
constexpr const char* kFullHeader = "user_id,item_id,rating,location,time,weather,emotion";
constexpr const char* kEdgeHeader = "source,target,relation";

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

// getline wrapper that drops a trailing '\r' so CRLF files ingest cleanly.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

// Strict: the whole cell must be a finite number.
double parse_rating_cell(const std::string& cell, std::size_t line_no) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw ParseError(line_no, "non-numeric rating: '" + cell + "'");
    if (v < 0.0) throw ParseError(line_no, "negative rating: '" + cell + "'");
    return v;
}

std::optional<std::string> cell_to_tag(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    return cell;
}

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

const std::string& tag_or_empty(const std::optional<std::string>& tag) {
    static const std::string empty;
    return tag ? *tag : empty;
}

} // namespace

Dataset make_dataset(RatingsMatrix ratings, SocialGraph graph) {
    Dataset d;
    d.all_users.insert(graph.users().begin(), graph.users().end());
    for (const auto& [u, row] : ratings.rows()) d.all_users.insert(u);
    d.ratings = std::move(ratings);
    d.graph = std::move(graph);
    return d;
}

RatingsMatrix ingest_ratings(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError(1, "missing header");

    bool with_context;
    if (line == kFullHeader) {
        with_context = true;
    } else if (line == kShortHeader) {
        with_context = false;
    } else {
        throw ParseError(1, "unrecognized ratings header: '" + line + "'");
    }
    const std::size_t want_cols = with_context ? 7 : 3;

    RatingsMatrix m;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto cells = split_cells(line);
        if (cells.size() != want_cols)
            throw ParseError(line_no, "expected " + std::to_string(want_cols) + " columns, got " +
                                          std::to_string(cells.size()));
        if (cells[0].empty()) throw ParseError(line_no, "empty user_id");
        if (cells[1].empty()) throw ParseError(line_no, "empty item_id");

        double value = parse_rating_cell(cells[2], line_no);
        if (value == 0.0) continue; // missing marker

        Rating r;
        r.user = UserId{cells[0]};
        r.item = ItemId{cells[1]};
        r.value = value;
        if (with_context) {
            r.context.location = cell_to_tag(cells[3]);
            r.context.time = cell_to_tag(cells[4]);
            r.context.weather = cell_to_tag(cells[5]);
            r.context.emotion = cell_to_tag(cells[6]);
        }
        try {
            m.add(r);
        } catch (const DuplicateRating&) {
            throw DuplicateRating(r.user.value, r.item.value, line_no);
        }
    }
    return m;
}

SocialGraph ingest_edges(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError(1, "missing header");
    if (line != kEdgeHeader) throw ParseError(1, "unrecognized edges header: '" + line + "'");

    SocialGraph g;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto cells = split_cells(line);
        if (cells.size() != 3)
            throw ParseError(line_no, "expected 3 columns, got " + std::to_string(cells.size()));
        if (cells[0].empty()) throw ParseError(line_no, "empty source");
        if (cells[1].empty()) throw ParseError(line_no, "empty target");

        Relation rel;
        if (!parse_relation(cells[2], rel))
            throw ParseError(line_no, "unknown relation: '" + cells[2] + "'");
        if (cells[0] == cells[1])
            throw ParseError(line_no, "self-loop edge: '" + cells[0] + "'");
        g.add_edge(SocialEdge{UserId{cells[0]}, UserId{cells[1]}, rel});
    }
    return g;
}

void write_ratings_csv(const RatingsMatrix& m, std::ostream& out) {
    out << kFullHeader << '\n';
    for (const auto& [u, row] : m.rows()) {
        for (const auto& [i, cell] : row) {
            out << u.value << ',' << i.value << ',' << format_value(cell.value) << ','
                << tag_or_empty(cell.context.location) << ',' << tag_or_empty(cell.context.time)
                << ',' << tag_or_empty(cell.context.weather) << ','
                << tag_or_empty(cell.context.emotion) << '\n';
        }
    }
}

void write_edges_csv(const SocialGraph& g, std::ostream& out) {
    out << kEdgeHeader << '\n';
    for (const auto& e : g.edges())
        out << e.source.value << ',' << e.target.value << ',' << to_string(e.relation) << '\n';
}

std::vector<ItemId> co_rated_items(const RatingsMatrix& m, const UserId& a, const UserId& b) {
    const auto& ra = m.row(a);
    const auto& rb = m.row(b);
    std::vector<ItemId> out;
    for (const auto& [item, cell] : ra)
        if (rb.count(item)) out.push_back(item);
    return out;
}

double user_mean(const RatingsMatrix& m, const UserId& u, const std::vector<ItemId>& over) {
    if (over.empty()) throw EmptySupport();
    const auto& row = m.row(u);
    double sum = 0.0;
    for (const auto& item : over) {
        auto it = row.find(item);
        if (it == row.end()) throw UnknownItem(item.value);
        sum += it->second.value;
    }
    return sum / static_cast<double>(over.size());
}

double user_mean(const RatingsMatrix& m, const UserId& u) {
    const auto& row = m.row(u);
    double sum = 0.0;
    for (const auto& [item, cell] : row) sum += cell.value;
    return sum / static_cast<double>(row.size());
}

} // namespace socrec
