#include "phenylo/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "phenylo/isomorphism.hpp"

namespace phenylo {

int SegmentSpec::h() const {
    int sum = std::accumulate(t_values.begin(), t_values.end(), 0);
    return sum + static_cast<int>(t_values.size()) - 1;
}

PhenyleneTree chain_from_turns(const std::string& word) {
    for (char c : word)
        if (c != 'S' && c != 'L' && c != 'R')
            throw std::invalid_argument("turn word may only contain S, L, R");
    int h = static_cast<int>(word.size()) + 2;
    PhenyleneTree t;
    t.h = h;
    int exit_slot = 0;  // hexagon 0 attaches through slot 0
    for (int i = 0; i < h - 1; ++i) {
        t.junctions.push_back(Junction{i, exit_slot, i + 1, 0});
        if (i + 1 <= h - 2) {
            // Next hexagon's entry is its slot 0; S continues para, L/R turn.
            char c = word[i];
            exit_slot = (c == 'S') ? 3 : (c == 'L' ? 2 : 4);
        }
    }
    return t;
}

PhenyleneTree linear(int h) {
    if (h < 1) throw std::invalid_argument("linear: h must be >= 1");
    if (h == 1) return PhenyleneTree{1, {}};
    return chain_from_turns(std::string(h - 2, 'S'));
}

PhenyleneTree segment_chain(const SegmentSpec& spec) {
    const auto& t = spec.t_values;
    int k = static_cast<int>(t.size()) - 1;
    if (k < 1) throw std::invalid_argument("segment_chain: need at least two segments");
    if (t.front() < 1 || t.back() < 1)
        throw std::invalid_argument("segment_chain: terminal t-values must be >= 1");
    for (int i = 1; i < k; ++i)
        if (t[i] < 0) throw std::invalid_argument("segment_chain: internal t-values must be >= 0");
    if (!spec.zigzag.empty() && static_cast<int>(spec.zigzag.size()) != k - 1)
        throw std::invalid_argument("segment_chain: expected " + std::to_string(k - 1) +
                                    " zigzag flags");

    int h = spec.h();
    std::string word(h - 2, 'S');
    int pos = t[0];  // turn-hexagon position of segment boundary i
    char letter = 'L';
    for (int i = 1; i <= k; ++i) {
        word[pos - 1] = letter;
        if (i < k) {
            bool zig = spec.zigzag.empty() ? true : static_cast<bool>(spec.zigzag[i - 1]);
            if (zig) letter = (letter == 'L') ? 'R' : 'L';
            pos += t[i] + 1;
        }
    }
    return chain_from_turns(word);
}

PhenyleneTree cl(const std::vector<int>& t_values) {
    return segment_chain(SegmentSpec{t_values, {}});
}

PhenyleneTree pl(int j, int k, int n) {
    if (!(1 <= j && j <= k && k <= n))
        throw std::invalid_argument("pl: need 1 <= j <= k <= n");
    PhenyleneTree t;
    t.h = j + k + n + 1;
    int next = 1;
    int slot = 0;
    for (int len : {j, k, n}) {
        t.junctions.push_back(Junction{0, slot, next, 0});
        for (int i = 1; i < len; ++i) {
            t.junctions.push_back(Junction{next, 3, next + 1, 0});
            ++next;
        }
        ++next;
        slot += 2;
    }
    return t;
}

namespace {

std::string cl_name(const std::vector<int>& ts) {
    std::string s = "CL(";
    for (size_t i = 0; i < ts.size(); ++i) s += (i ? "," : "") + std::to_string(ts[i]);
    return s + ")";
}

FamilySet build_set(const std::vector<std::pair<std::string, std::vector<int>>>& specs,
                    size_t expected) {
    FamilySet set;
    std::vector<std::string> certs;
    for (const auto& [name, ts] : specs) {
        if (ts.front() < 1 || ts.back() < 1) continue;
        if (std::any_of(ts.begin() + 1, ts.end() - 1, [](int x) { return x < 0; })) continue;
        PhenyleneTree t = cl(ts);
        std::string c = certificate(expand(t));
        if (std::find(certs.begin(), certs.end(), c) != certs.end()) continue;
        certs.push_back(c);
        set.members.push_back(NamedTree{name, std::move(t)});
    }
    set.complete = set.members.size() == expected;
    return set;
}

}  // namespace

FamilySet second_minimal_set(int h) {
    if (h < 4) throw std::invalid_argument("second_minimal_set: h must be >= 4");
    return build_set({{cl_name({1, h - 2}), {1, h - 2}},
                      {cl_name({1, h - 4, 1}), {1, h - 4, 1}}},
                     2);
}

FamilySet third_minimal_chain_set(int h) {
    if (h < 5) throw std::invalid_argument("third_minimal_chain_set: h must be >= 5");
    return build_set({{cl_name({2, h - 3}), {2, h - 3}},
                      {cl_name({1, 0, h - 3}), {1, 0, h - 3}},
                      {cl_name({1, h - 5, 2}), {1, h - 5, 2}},
                      {cl_name({2, h - 6, 2}), {2, h - 6, 2}},
                      {cl_name({1, 0, h - 5, 1}), {1, 0, h - 5, 1}},
                      {cl_name({1, 0, h - 6, 2}), {1, 0, h - 6, 2}},
                      {cl_name({1, 0, h - 6, 0, 1}), {1, 0, h - 6, 0, 1}}},
                     7);
}

PhenyleneTree parse_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec must look like name:params, got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);

    auto parse_ints = [&] {
        std::vector<int> vals;
        size_t pos = 0;
        while (pos <= params.size()) {
            size_t comma = params.find(',', pos);
            std::string tok = params.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
            try {
                size_t used = 0;
                vals.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer '" + tok + "' in family spec");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return vals;
    };

    if (name == "linear") {
        auto v = parse_ints();
        if (v.size() != 1) throw std::invalid_argument("linear takes one parameter");
        return linear(v[0]);
    }
    if (name == "chain") return chain_from_turns(params);
    if (name == "cl") return cl(parse_ints());
    if (name == "pl") {
        auto v = parse_ints();
        if (v.size() != 3) throw std::invalid_argument("pl takes three parameters");
        return pl(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

// cert -> display name for every constructor-expressible class at this h.
const std::map<std::string, std::string>& family_names_at(int h) {
    static std::mutex mu;
    static std::map<int, std::map<std::string, std::string>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;

    std::map<std::string, std::string>& names = cache[h];
    auto add = [&](const std::string& name, const PhenyleneTree& t) {
        names.emplace(certificate(expand(t)), name);
    };
    add("L_" + std::to_string(h), linear(h));

    // All zigzag segment chains: compositions sum(t) + k = h with terminal
    // t >= 1, internal t >= 0.
    std::vector<int> ts;
    std::function<void()> rec = [&] {
        int k = static_cast<int>(ts.size()) - 1;
        int sum = std::accumulate(ts.begin(), ts.end(), 0);
        if (k >= 1 && !ts.empty() && ts.back() >= 1 && sum + k == h) add(cl_name(ts), cl(ts));
        if (ts.empty() || sum + k + 2 <= h) {
            int lo = ts.empty() ? 1 : 0;
            for (int v = lo; sum + v + k + 1 <= h; ++v) {
                ts.push_back(v);
                rec();
                ts.pop_back();
            }
        }
    };
    rec();

    for (int j = 1; j + j + j + 1 <= h; ++j)
        for (int k = j; j + k + k + 1 <= h; ++k) {
            int n = h - 1 - j - k;
            if (n >= k)
                add("PL(" + std::to_string(j) + "," + std::to_string(k) + "," +
                        std::to_string(n) + ")",
                    pl(j, k, n));
        }
    return names;
}

}  // namespace

std::optional<std::string> recognize_family(const PhenyleneTree& t) {
    require_valid(t);
    const auto& names = family_names_at(t.h);
    auto it = names.find(certificate(expand(t)));
    if (it == names.end()) return std::nullopt;
    return it->second;
}

}  // namespace phenylo
