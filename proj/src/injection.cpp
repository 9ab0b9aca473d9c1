#include "houghton/injection.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

// Byte-key layout limits. Desk scale is n <= 4 with small windows; anything
// beyond these caps is a configuration mistake, not a use case.
constexpr std::int32_t kMaxRays = 8;
constexpr std::int32_t kMaxTranslation = 100;
constexpr std::int32_t kMaxPosition = 120;

} // namespace

std::string RayGerm::to_string() const
{
    std::string s = "m=" + std::to_string(translation) + ";";
    for (const RayPoint& p : prefix) s += p.to_string();
    return s;
}

void EventualInjection::rebuild_offsets()
{
    offset_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) offset_[i + 1] = offset_[i] + bounds_[i];
}

void EventualInjection::canonicalize()
{
    // Shrink each B_i while its last entry is the pure translation value.
    bool changed = false;
    for (int i = 0; i < n_; ++i) {
        while (bounds_[i] >= 1) {
            const RayPoint last = targets_[offset_[i] + bounds_[i] - 1];
            if (last.ray == i + 1 && last.pos == bounds_[i] + m_[i]) {
                targets_.erase(targets_.begin() + offset_[i] + bounds_[i] - 1);
                --bounds_[i];
                changed = true;
                rebuild_offsets();
            } else {
                break;
            }
        }
    }
    if (changed) rebuild_offsets();
}

void EventualInjection::validate() const
{
    if (n_ < 1 || n_ > kMaxRays) throw InvalidInjection("ray count out of range");
    if (static_cast<int>(m_.size()) != n_ || static_cast<int>(bounds_.size()) != n_)
        throw InvalidInjection("translation/support vectors must have length n");
    std::int64_t total = 0;
    for (int i = 0; i < n_; ++i) {
        if (bounds_[i] < 0) throw InvalidInjection("negative support bound");
        if (std::abs(m_[i]) > kMaxTranslation || bounds_[i] > kMaxPosition)
            throw InvalidInjection("encoding exceeds supported scale");
        // Well-definedness: first implied image position is B_i + 1 + m_i >= 1.
        if (bounds_[i] + m_[i] < 0)
            throw InvalidInjection("implied image would leave the ray (B_i + m_i < 0)");
        total += bounds_[i];
    }
    if (static_cast<std::int64_t>(targets_.size()) != total)
        throw InvalidInjection("exception target count does not match support bounds");

    std::set<RayPoint> seen;
    for (const RayPoint& t : targets_) {
        if (t.ray < 1 || t.ray > n_ || t.pos < 1)
            throw InvalidInjection("exception target outside [n] x N");
        if (t.pos > kMaxPosition) throw InvalidInjection("encoding exceeds supported scale");
        // Implied images of ray j occupy every position > B_j + m_j, so an
        // exception target colliding with that tail breaks injectivity.
        if (t.pos > bounds_[t.ray - 1] + m_[t.ray - 1])
            throw InvalidInjection("exception target collides with translation tail");
        if (!seen.insert(t).second)
            throw InvalidInjection("duplicate image point (not injective)");
    }
}

EventualInjection EventualInjection::from_parts(int n, std::vector<std::int32_t> translations,
                                                std::vector<std::int32_t> support_bounds,
                                                std::vector<RayPoint> exception_targets)
{
    EventualInjection phi;
    phi.n_ = n;
    phi.m_ = std::move(translations);
    phi.bounds_ = std::move(support_bounds);
    phi.targets_ = std::move(exception_targets);
    if (static_cast<int>(phi.bounds_.size()) != n)
        throw InvalidInjection("support bound vector must have length n");
    phi.rebuild_offsets();
    if (phi.offset_.back() != static_cast<std::int32_t>(phi.targets_.size()))
        throw InvalidInjection("exception target count does not match support bounds");
    phi.canonicalize();
    phi.validate();
    return phi;
}

EventualInjection EventualInjection::identity(int n)
{
    return from_parts(n, std::vector<std::int32_t>(n, 0), std::vector<std::int32_t>(n, 0), {});
}

EventualInjection EventualInjection::generator_t(int ray, int n)
{
    if (ray < 1 || ray > n) throw IndexError("generator_t: ray index out of range");
    std::vector<std::int32_t> m(n, 0);
    m[ray - 1] = 1;
    return from_parts(n, std::move(m), std::vector<std::int32_t>(n, 0), {});
}

EventualInjection EventualInjection::transposition_tau(int ray, int n)
{
    if (ray < 1 || ray > n) throw IndexError("transposition_tau: ray index out of range");
    std::vector<std::int32_t> bounds(n, 0);
    bounds[ray - 1] = 2;
    std::vector<RayPoint> targets = {{ray, 2}, {ray, 1}};
    return from_parts(n, std::vector<std::int32_t>(n, 0), std::move(bounds), std::move(targets));
}

std::int32_t EventualInjection::chi_component(int ray) const
{
    if (ray < 1 || ray > n_) throw IndexError("chi_component: ray index out of range");
    return m_[ray - 1];
}

std::int64_t EventualInjection::deficiency_f() const
{
    std::int64_t f = 0;
    for (std::int32_t mi : m_) f += mi;
    return f;
}

RayPoint EventualInjection::apply(RayPoint p) const
{
    if (p.ray < 1 || p.ray > n_ || p.pos < 1)
        throw IndexError("apply: point outside [n] x N");
    const int i = p.ray - 1;
    if (p.pos <= bounds_[i]) return targets_[offset_[i] + p.pos - 1];
    return {p.ray, p.pos + m_[i]};
}

EventualInjection EventualInjection::compose(const EventualInjection& second) const
{
    if (n_ != second.n_) throw DimensionError("compose: mismatched ray counts");
    std::vector<std::int32_t> m(n_), bounds(n_);
    for (int i = 0; i < n_; ++i) {
        m[i] = m_[i] + second.m_[i];
        // Past this bound both factors act as pure translations.
        bounds[i] = std::max({bounds_[i], second.bounds_[i] - m_[i], 0});
    }
    std::vector<RayPoint> targets;
    for (int i = 0; i < n_; ++i)
        for (std::int32_t x = 1; x <= bounds[i]; ++x)
            targets.push_back(second.apply(apply({i + 1, x})));
    return from_parts(n_, std::move(m), std::move(bounds), std::move(targets));
}

EventualInjection EventualInjection::up(int ray) const
{
    if (ray < 1 || ray > n_) throw IndexError("up: ray index out of range");
    const int i = ray - 1;
    std::vector<std::int32_t> m = m_;
    std::vector<std::int32_t> bounds = bounds_;
    std::vector<RayPoint> targets = targets_;
    ++m[i];
    if (bounds[i] > 0) {
        // (t_ray ∘ phi)(ray, x) = phi(ray, x + 1): drop the first entry.
        targets.erase(targets.begin() + offset_[i]);
        --bounds[i];
    }
    return from_parts(n_, std::move(m), std::move(bounds), std::move(targets));
}

std::vector<RayPoint> EventualInjection::missing_points() const
{
    std::vector<RayPoint> missing;
    for (int j = 0; j < n_; ++j) {
        // Image on ray j = exception targets landing there + all positions
        // > B_j + m_j. Missing points live in [1 .. B_j + m_j].
        std::vector<std::int32_t> hit;
        for (const RayPoint& t : targets_)
            if (t.ray == j + 1) hit.push_back(t.pos);
        std::sort(hit.begin(), hit.end());
        std::size_t k = 0;
        for (std::int32_t y = 1; y <= bounds_[j] + m_[j]; ++y) {
            if (k < hit.size() && hit[k] == y) {
                ++k;
            } else {
                missing.push_back({j + 1, y});
            }
        }
    }
    return missing;
}

std::vector<EventualInjection> EventualInjection::down_options(int ray) const
{
    if (ray < 1 || ray > n_) throw IndexError("down_options: ray index out of range");
    const int i = ray - 1;
    std::vector<EventualInjection> out;
    for (const RayPoint& missing : missing_points()) {
        std::vector<std::int32_t> m = m_;
        std::vector<std::int32_t> bounds = bounds_;
        --m[i];
        ++bounds[i];
        std::vector<RayPoint> targets;
        targets.reserve(targets_.size() + 1);
        for (int j = 0; j < n_; ++j) {
            if (j == i) {
                // psi(i,1) = the chosen missing point, psi(i,x) = phi(i,x-1).
                targets.push_back(missing);
                for (std::int32_t x = 1; x <= bounds_[j]; ++x)
                    targets.push_back(targets_[offset_[j] + x - 1]);
            } else {
                for (std::int32_t x = 1; x <= bounds_[j]; ++x)
                    targets.push_back(targets_[offset_[j] + x - 1]);
            }
        }
        out.push_back(from_parts(n_, std::move(m), std::move(bounds), std::move(targets)));
    }
    return out;
}

RayGerm EventualInjection::ray_germ(int ray) const
{
    if (ray < 1 || ray > n_) throw IndexError("ray_germ: ray index out of range");
    const int i = ray - 1;
    RayGerm g;
    g.translation = m_[i];
    g.prefix.assign(targets_.begin() + offset_[i], targets_.begin() + offset_[i + 1]);
    return g;
}

std::string EventualInjection::to_text() const
{
    std::ostringstream os;
    os << "n=" << n_ << "; m=";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << m_[i];
    os << "; B=";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << bounds_[i];
    os << "; exc=";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        for (std::int32_t x = 1; x <= bounds_[i]; ++x) {
            const RayPoint t = targets_[offset_[i] + x - 1];
            if (!first) os << ";";
            first = false;
            os << "(" << (i + 1) << "," << x << ")->(" << t.ray << "," << t.pos << ")";
        }
    }
    return os.str();
}

std::string EventualInjection::key() const
{
    std::string k;
    k.reserve(1 + 2 * n_ + 2 * targets_.size());
    k.push_back(static_cast<char>(n_));
    for (std::int32_t v : m_) k.push_back(static_cast<char>(v + kMaxTranslation + 1));
    for (std::int32_t v : bounds_) k.push_back(static_cast<char>(v));
    for (const RayPoint& t : targets_) {
        k.push_back(static_cast<char>(t.ray));
        k.push_back(static_cast<char>(t.pos));
    }
    return k;
}

namespace {

std::vector<std::int32_t> parse_int_list(const std::string& s, const char* what)
{
    std::vector<std::int32_t> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError(std::string("bad integer list for ") + what + ": " + s);
        }
    }
    return out;
}

std::string expect_field(std::istringstream& is, const std::string& name)
{
    std::string tok;
    if (!std::getline(is, tok, ';')) throw ParseError("missing field " + name);
    const auto start = tok.find_first_not_of(' ');
    if (start == std::string::npos || tok.compare(start, name.size() + 1, name + "=") != 0)
        throw ParseError("expected field " + name + "= in '" + tok + "'");
    return tok.substr(start + name.size() + 1);
}

} // namespace

EventualInjection EventualInjection::parse(const std::string& text)
{
    std::istringstream is(text);
    int n = 0;
    try {
        n = std::stoi(expect_field(is, "n"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad ray count in '" + text + "'");
    }
    auto m = parse_int_list(expect_field(is, "m"), "m");
    auto bounds = parse_int_list(expect_field(is, "B"), "B");

    std::string rest;
    std::getline(is, rest);
    const auto pos = rest.find("exc=");
    if (pos == std::string::npos) throw ParseError("missing field exc in '" + text + "'");
    const std::string exc = rest.substr(pos + 4);

    // Exceptions must arrive sorted by domain point: their positions are a
    // dense ray-major prefix, so we parse and check domain order directly.
    std::vector<RayPoint> targets;
    std::vector<RayPoint> domains;
    std::istringstream es(exc);
    std::string item;
    while (std::getline(es, item, ';')) {
        if (item.empty()) continue;
        int di, dx, ti, tx;
        if (std::sscanf(item.c_str(), "(%d,%d)->(%d,%d)", &di, &dx, &ti, &tx) != 4)
            throw ParseError("bad exception entry '" + item + "'");
        domains.push_back({di, dx});
        targets.push_back({ti, tx});
    }
    for (std::size_t k = 0; k + 1 < domains.size(); ++k)
        if (!(domains[k] < domains[k + 1]))
            throw ParseError("exception entries not sorted by domain point");
    // Domain points must be exactly the dense prefixes declared by B.
    std::size_t k = 0;
    for (int i = 0; i < n && static_cast<std::size_t>(i) < bounds.size(); ++i)
        for (std::int32_t x = 1; x <= bounds[i]; ++x, ++k)
            if (k >= domains.size() || domains[k] != RayPoint{i + 1, x})
                throw ParseError("exception domain does not match support bounds");
    if (k != domains.size()) throw ParseError("exception domain does not match support bounds");

    return from_parts(n, std::move(m), std::move(bounds), std::move(targets));
}

std::size_t hash_value(const EventualInjection& phi)
{
    return std::hash<std::string>{}(phi.key());
}

} // namespace houghton
