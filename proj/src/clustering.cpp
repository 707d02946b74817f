#include "socrec/clustering.hpp"

#include <cmath>
#include <sstream>

namespace socrec {
namespace {

double total_movement(const std::vector<Centroid>& before, const std::vector<Centroid>& after) {
    double total = 0.0;
    for (std::size_t j = 0; j < before.size(); ++j) {
        // Euclidean distance over the union support; an item present on only
        // one side counts with its full value.
        double sq = 0.0;
        auto a = before[j].begin();
        auto b = after[j].begin();
        while (a != before[j].end() || b != after[j].end()) {
            double diff;
            if (b == after[j].end() || (a != before[j].end() && a->first < b->first)) {
                diff = a->second;
                ++a;
            } else if (a == before[j].end() || b->first < a->first) {
                diff = b->second;
                ++b;
            } else {
                diff = a->second - b->second;
                ++a;
                ++b;
            }
            sq += diff * diff;
        }
        total += std::sqrt(sq);
    }
    return total;
}

std::vector<std::set<UserId>> members_by_cluster(const std::map<UserId, std::size_t>& assignment,
                                                 std::size_t k) {
    std::vector<std::set<UserId>> members(k);
    for (const auto& [u, idx] : assignment) members[idx].insert(u);
    return members;
}

// Re-seed every empty cluster with the worst-fitting user that has never
// been a seed, drawn only from clusters that can spare a member.
void repair_empty_clusters(const RatingsMatrix& m, std::map<UserId, std::size_t>& assignment,
                           const std::vector<Centroid>& centroids, std::set<UserId>& ever_seeds) {
    const std::size_t k = centroids.size();
    auto members = members_by_cluster(assignment, k);
    for (std::size_t j = 0; j < k; ++j) {
        if (!members[j].empty()) continue;
        bool found = false;
        UserId worst;
        double worst_sim = 0.0;
        for (const auto& [u, idx] : assignment) { // lexicographic, so ties keep the first
            if (ever_seeds.count(u) || members[idx].size() < 2) continue;
            double sim = centroid_similarity(m, u, centroids[j]);
            if (!found || sim < worst_sim) {
                found = true;
                worst = u;
                worst_sim = sim;
            }
        }
        if (!found) continue;
        members[assignment[worst]].erase(worst);
        members[j].insert(worst);
        assignment[worst] = j;
        ever_seeds.insert(worst);
    }
}

} // namespace

const char* to_string(ClusterMode m) {
    return m == ClusterMode::single_pass ? "single_pass" : "iterative";
}

bool parse_cluster_mode(const std::string& s, ClusterMode& out) {
    if (s == "single_pass" || s == "single-pass") { out = ClusterMode::single_pass; return true; }
    if (s == "iterative") { out = ClusterMode::iterative; return true; }
    return false;
}

std::vector<std::pair<UserId, Centroid>> init_centroids(const RatingsMatrix& m, int k) {
    auto users = m.users();
    if (k < 1 || static_cast<std::size_t>(k) > users.size())
        throw InvalidK("k must be in [1, " + std::to_string(users.size()) + "], got " +
                       std::to_string(k));
    std::vector<std::pair<UserId, Centroid>> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Centroid c;
        for (const auto& [item, cell] : m.row(users[static_cast<std::size_t>(i)]))
            c.emplace(item, cell.value);
        out.emplace_back(users[static_cast<std::size_t>(i)], std::move(c));
    }
    return out;
}

double centroid_similarity(const RatingsMatrix& m, const UserId& u, const Centroid& c) {
    const auto& row = m.row(u);
    std::vector<double> x, y;
    for (const auto& [item, cell] : row) {
        auto it = c.find(item);
        if (it == c.end()) continue;
        x.push_back(cell.value);
        y.push_back(it->second);
    }
    auto outcome = pearson_paired(x, y);
    return outcome.is_defined() ? outcome.value() : 0.0;
}

std::map<UserId, std::size_t> assign(const RatingsMatrix& m, const std::vector<Centroid>& centroids,
                                     const std::vector<UserId>& users) {
    if (centroids.empty()) throw InvalidConfig("assignment needs at least one centroid");
    std::map<UserId, std::size_t> out;
    for (const auto& u : users) {
        std::size_t best = 0;
        double best_sim = centroid_similarity(m, u, centroids[0]);
        for (std::size_t j = 1; j < centroids.size(); ++j) {
            double sim = centroid_similarity(m, u, centroids[j]);
            if (sim > best_sim) { // strict: ties stay at the lowest index
                best = j;
                best_sim = sim;
            }
        }
        out[u] = best;
    }
    return out;
}

std::vector<Centroid> update_centroids(const RatingsMatrix& m,
                                       const std::map<UserId, std::size_t>& assignment,
                                       std::size_t k) {
    std::vector<std::map<ItemId, std::pair<double, std::size_t>>> acc(k);
    for (const auto& [u, idx] : assignment) {
        for (const auto& [item, cell] : m.row(u)) {
            auto& slot = acc[idx][item];
            slot.first += cell.value;
            slot.second += 1;
        }
    }
    std::vector<Centroid> out(k);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [item, sum_count] : acc[j])
            out[j].emplace(item, sum_count.first / static_cast<double>(sum_count.second));
    return out;
}

ClusterSet cluster(const RatingsMatrix& m, const ClusteringConfig& config) {
    auto seeded = init_centroids(m, config.k);
    const std::size_t k = seeded.size();
    auto users = m.users();

    std::vector<Centroid> centroids;
    centroids.reserve(k);
    std::set<UserId> ever_seeds;
    std::map<UserId, std::size_t> assignment;
    for (std::size_t j = 0; j < k; ++j) {
        centroids.push_back(seeded[j].second);
        ever_seeds.insert(seeded[j].first);
        assignment[seeded[j].first] = j; // seeds are pinned on the first pass
    }
    std::vector<UserId> rest(users.begin() + static_cast<std::ptrdiff_t>(k), users.end());
    auto rest_assignment = assign(m, centroids, rest);
    assignment.insert(rest_assignment.begin(), rest_assignment.end());

    int iterations = 1;
    if (config.mode == ClusterMode::iterative) {
        if (config.max_iterations < 1)
            throw InvalidConfig("max_iterations must be positive");
        if (config.epsilon < 0.0) throw InvalidConfig("epsilon must be non-negative");
        iterations = 0;
        while (true) {
            ++iterations;
            repair_empty_clusters(m, assignment, centroids, ever_seeds);
            auto updated = update_centroids(m, assignment, k);
            auto members = members_by_cluster(assignment, k);
            for (std::size_t j = 0; j < k; ++j)
                if (members[j].empty()) updated[j] = centroids[j]; // nothing to learn from
            double movement = total_movement(centroids, updated);
            centroids = std::move(updated);
            if (movement <= config.epsilon || iterations >= config.max_iterations) break;
            assignment = assign(m, centroids, users);
        }
    }

    ClusterSet cs;
    cs.k = config.k;
    cs.mode = config.mode;
    cs.iterations_run = iterations;
    cs.total_users = users.size();
    auto members = members_by_cluster(assignment, k);
    for (std::size_t j = 0; j < k; ++j)
        cs.clusters.push_back(Cluster{centroids[j], std::move(members[j]), seeded[j].first});
    return cs;
}

std::size_t cluster_of(const ClusterSet& cs, const UserId& u) {
    for (std::size_t j = 0; j < cs.clusters.size(); ++j)
        if (cs.clusters[j].members.count(u)) return j;
    throw NotClustered(u.value);
}

std::string serialize(const ClusterSet& cs) {
    std::ostringstream out;
    out << "k=" << cs.k << " mode=" << to_string(cs.mode) << " iterations=" << cs.iterations_run
        << '\n';
    for (std::size_t j = 0; j < cs.clusters.size(); ++j) {
        out << j << '\t';
        bool first = true;
        for (const auto& u : cs.clusters[j].members) {
            if (!first) out << ',';
            out << u.value;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

ClusterSet parse_cluster_set(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing cluster header");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    ClusterSet cs;
    {
        std::istringstream hdr(line);
        std::string k_field, mode_field, iter_field;
        if (!(hdr >> k_field >> mode_field >> iter_field) ||
            k_field.rfind("k=", 0) != 0 || mode_field.rfind("mode=", 0) != 0 ||
            iter_field.rfind("iterations=", 0) != 0)
            throw ParseError(1, "bad cluster header: '" + line + "'");
        try {
            cs.k = std::stoi(k_field.substr(2));
            cs.iterations_run = std::stoi(iter_field.substr(11));
        } catch (const std::exception&) {
            throw ParseError(1, "bad cluster header: '" + line + "'");
        }
        if (!parse_cluster_mode(mode_field.substr(5), cs.mode))
            throw ParseError(1, "unknown cluster mode in header: '" + line + "'");
    }

    std::size_t line_no = 1;
    std::set<UserId> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(line_no, "missing tab in cluster line");
        std::size_t index = 0;
        try {
            index = static_cast<std::size_t>(std::stoul(line.substr(0, tab)));
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad cluster index");
        }
        if (index != cs.clusters.size())
            throw ParseError(line_no, "cluster indices must be consecutive from 0");
        Cluster c;
        std::string rest = line.substr(tab + 1);
        std::size_t start = 0;
        while (start <= rest.size() && !rest.empty()) {
            std::size_t pos = rest.find(',', start);
            std::string id =
                pos == std::string::npos ? rest.substr(start) : rest.substr(start, pos - start);
            if (id.empty()) throw ParseError(line_no, "empty member id");
            if (!seen.insert(UserId{id}).second)
                throw ParseError(line_no, "user in more than one cluster: '" + id + "'");
            c.members.insert(UserId{id});
            cs.total_users += 1;
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        cs.clusters.push_back(std::move(c));
    }
    if (static_cast<int>(cs.clusters.size()) != cs.k)
        throw ParseError(line_no, "cluster count does not match header k");
    return cs;
}

} // namespace socrec
