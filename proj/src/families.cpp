#include "ecc/families.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "ecc/errors.hpp"

namespace ecc {

namespace {

void check_common(const FamilySpec& s) {
    switch (s.kind) {
        case FamilyKind::Star:
            if (s.n < 2) throw InvalidFamilyParameters("star needs n >= 2");
            break;
        case FamilyKind::Path:
            if (s.n < 1) throw InvalidFamilyParameters("path needs n >= 1");
            break;
        case FamilyKind::OddCaterpillar:
            if (s.d < 3 || s.d % 2 == 0)
                throw InvalidFamilyParameters("odd caterpillar needs odd d >= 3");
            if (s.a < 0 || s.b < 0 || s.a + s.b != s.n - s.d - 1)
                throw InvalidFamilyParameters("odd caterpillar needs a,b >= 0 with a+b = n-d-1");
            break;
        case FamilyKind::EvenCaterpillar:
            if (s.d < 4 || s.d % 2 == 1)
                throw InvalidFamilyParameters("even caterpillar needs even d >= 4");
            if (s.a < 0 || s.b < 0 || s.c < 0 || s.a + s.b + s.c != s.n - s.d - 1)
                throw InvalidFamilyParameters("even caterpillar needs a,b,c >= 0 with a+b+c = n-d-1");
            break;
    }
}

Graph build_impl(const FamilySpec& s) {
    std::vector<std::pair<int, int>> edges;
    switch (s.kind) {
        case FamilyKind::Star:
            for (int v = 1; v < s.n; ++v) edges.emplace_back(0, v);
            break;
        case FamilyKind::Path:
            for (int v = 1; v < s.n; ++v) edges.emplace_back(v - 1, v);
            break;
        case FamilyKind::OddCaterpillar: {
            for (int v = 1; v <= s.d; ++v) edges.emplace_back(v - 1, v);
            int next = s.d + 1;
            int host_a = (s.d - 1) / 2;
            int host_b = (s.d + 1) / 2;
            for (int i = 0; i < s.a; ++i) edges.emplace_back(host_a, next++);
            for (int i = 0; i < s.b; ++i) edges.emplace_back(host_b, next++);
            break;
        }
        case FamilyKind::EvenCaterpillar: {
            for (int v = 1; v <= s.d; ++v) edges.emplace_back(v - 1, v);
            int next = s.d + 1;
            int mid = s.d / 2;
            for (int i = 0; i < s.a; ++i) edges.emplace_back(mid - 1, next++);
            for (int i = 0; i < s.b; ++i) edges.emplace_back(mid, next++);
            for (int i = 0; i < s.c; ++i) edges.emplace_back(mid + 1, next++);
            break;
        }
    }
    return from_edge_list(edges, s.n);
}

int parse_int_value(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer for '" + what + "': '" + text + "'");
    }
}

}  // namespace

Graph build(const FamilySpec& s) {
    check_common(s);
    if (s.kind == FamilyKind::OddCaterpillar && s.b < s.a)
        throw InvalidFamilyParameters("odd caterpillar convention requires b >= a");
    if (s.kind == FamilyKind::EvenCaterpillar && s.c < s.a)
        throw InvalidFamilyParameters("even caterpillar convention requires c >= a");
    return build_impl(s);
}

Graph build_unchecked(const FamilySpec& s) {
    check_common(s);
    return build_impl(s);
}

Graph double_star(int n, int a, int b) {
    if (n < 4) throw InvalidFamilyParameters("double star needs n >= 4");
    return build(odd_caterpillar(n, 3, a, b));
}

FamilySpec odd_caterpillar(int n, int d, int a, int b) {
    return FamilySpec{FamilyKind::OddCaterpillar, n, d, a, b, 0};
}

FamilySpec even_caterpillar(int n, int d, int a, int b, int c) {
    return FamilySpec{FamilyKind::EvenCaterpillar, n, d, a, b, c};
}

FamilySpec parse_family(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family must look like 'kind:key=value,...'");
    std::string kind(text.substr(0, colon));
    std::map<std::string, int> kv;
    std::string rest(text.substr(colon + 1));
    std::istringstream rs(rest);
    std::string item;
    while (std::getline(rs, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        if (kv.count(key)) throw ParseError("repeated key '" + key + "'");
        kv[key] = parse_int_value(item.substr(eq + 1), key);
    }
    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("family '" + kind + "' needs " + key);
        int v = it->second;
        kv.erase(it);
        return v;
    };
    FamilySpec s;
    if (kind == "star") {
        s.kind = FamilyKind::Star;
        s.n = take("n");
    } else if (kind == "path") {
        s.kind = FamilyKind::Path;
        s.n = take("n");
    } else if (kind == "odd") {
        s.kind = FamilyKind::OddCaterpillar;
        s.n = take("n");
        s.d = take("d");
        s.a = take("a");
        s.b = take("b");
    } else if (kind == "even") {
        s.kind = FamilyKind::EvenCaterpillar;
        s.n = take("n");
        s.d = take("d");
        s.a = take("a");
        s.b = take("b");
        s.c = take("c");
    } else {
        throw ParseError("unknown family kind '" + kind + "'");
    }
    if (!kv.empty()) throw ParseError("unexpected key '" + kv.begin()->first + "'");
    return s;
}

std::string family_to_string(const FamilySpec& s) {
    std::ostringstream out;
    switch (s.kind) {
        case FamilyKind::Star: out << "star:n=" << s.n; break;
        case FamilyKind::Path: out << "path:n=" << s.n; break;
        case FamilyKind::OddCaterpillar:
            out << "odd:n=" << s.n << ",d=" << s.d << ",a=" << s.a << ",b=" << s.b;
            break;
        case FamilyKind::EvenCaterpillar:
            out << "even:n=" << s.n << ",d=" << s.d << ",a=" << s.a << ",b=" << s.b << ",c=" << s.c;
            break;
    }
    return out.str();
}

}  // namespace ecc
