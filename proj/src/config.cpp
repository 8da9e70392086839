#include "morl/config.hpp"

#include "morl/environments.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace morl {

ConfigError::ConfigError(int line, const std::string& message)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// A scalar token or a bracketed list of values.
struct Value {
    std::string scalar;
    std::vector<Value> items;
    bool is_list = false;
};

class ValueParser {
public:
    ValueParser(std::string_view text, int line) : text_(text), line_(line) {}

    Value parse()
    {
        Value v = value();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing characters");
        return v;
    }

private:
    Value value()
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            Value list;
            list.is_list = true;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ']') {
                ++pos_;
                return list;
            }
            while (true) {
                list.items.push_back(value());
                skip_space();
                if (pos_ >= text_.size())
                    fail("unterminated list");
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ']') {
                    ++pos_;
                    return list;
                }
                fail("expected ',' or ']' in list");
            }
        }
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[')
            ++pos_;
        Value v;
        v.scalar = std::string(trim(text_.substr(start, pos_ - start)));
        return v;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ConfigError(line_, what); }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

struct Entry {
    std::string key;
    Value value;
    int line;
};

const std::string& scalar(const Entry& e)
{
    if (e.value.is_list)
        throw ConfigError(e.line, "'" + e.key + "' expects a single value, got a list");
    return e.value.scalar;
}

template <typename T>
T parse_number(const Entry& e, const std::string& s)
{
    T out{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
        throw ConfigError(e.line, "'" + e.key + "' expects a number, got '" + s + "'");
    return out;
}

int positive_int(const Entry& e)
{
    const int v = parse_number<int>(e, scalar(e));
    if (v <= 0)
        throw ConfigError(e.line, "'" + e.key + "' must be positive, got " + std::to_string(v));
    return v;
}

double real(const Entry& e)
{
    const double v = parse_number<double>(e, scalar(e));
    if (!std::isfinite(v))
        throw ConfigError(e.line, "'" + e.key + "' must be finite");
    return v;
}

double real_in(const Entry& e, double lo, double hi)
{
    const double v = real(e);
    if (v < lo || v > hi)
        throw ConfigError(e.line, "'" + e.key + "' must lie in [" + format_double(lo) + ", " + format_double(hi) + "]");
    return v;
}

double positive_real(const Entry& e)
{
    const double v = real(e);
    if (!(v > 0.0))
        throw ConfigError(e.line, "'" + e.key + "' must be positive");
    return v;
}

using Handler = std::function<void(ExperimentConfig&, const Entry&)>;

const std::map<std::string, Handler, std::less<>>& handlers()
{
    static const std::map<std::string, Handler, std::less<>> table = {
        {"environment",
         [](ExperimentConfig& c, const Entry& e) {
             c.environment = scalar(e);
             try {
                 (void)make_env(c.environment);
             } catch (const std::invalid_argument& ex) {
                 throw ConfigError(e.line, ex.what());
             }
         }},
        {"sigma",
         [](ExperimentConfig& c, const Entry& e) {
             const double v = real(e);
             if (v < 0.0)
                 throw ConfigError(e.line, "'sigma' must be nonnegative");
             c.sigma = v;
         }},
        {"n_layer1", [](ExperimentConfig& c, const Entry& e) { c.layers[0] = positive_int(e); }},
        {"n_layer2", [](ExperimentConfig& c, const Entry& e) { c.layers[1] = positive_int(e); }},
        {"n_layer3", [](ExperimentConfig& c, const Entry& e) { c.layers[2] = positive_int(e); }},
        {"algorithms",
         [](ExperimentConfig& c, const Entry& e) {
             if (!e.value.is_list)
                 throw ConfigError(e.line, "'algorithms' expects a list, e.g. [NSGA2, GA]");
             c.algorithms.clear();
             for (const auto& item : e.value.items) {
                 if (item.is_list)
                     throw ConfigError(e.line, "'algorithms' entries must be names");
                 const auto a = parse_algorithm(item.scalar);
                 if (!a)
                     throw ConfigError(e.line, "unknown algorithm '" + item.scalar + "'");
                 for (auto seen : c.algorithms)
                     if (seen == *a)
                         throw ConfigError(e.line, "algorithm '" + item.scalar + "' listed twice");
                 c.algorithms.push_back(*a);
             }
         }},
        {"pop_size",
         [](ExperimentConfig& c, const Entry& e) {
             c.pop_size = positive_int(e);
             if (c.pop_size % 2 != 0)
                 throw ConfigError(e.line, "'pop_size' must be even");
         }},
        {"generations", [](ExperimentConfig& c, const Entry& e) { c.generations = positive_int(e); }},
        {"n_episodes", [](ExperimentConfig& c, const Entry& e) { c.n_episodes = positive_int(e); }},
        {"n_runs", [](ExperimentConfig& c, const Entry& e) { c.n_runs = positive_int(e); }},
        {"master_seed",
         [](ExperimentConfig& c, const Entry& e) { c.master_seed = parse_number<std::uint64_t>(e, scalar(e)); }},
        {"output_dir", [](ExperimentConfig& c, const Entry& e) { c.output_dir = scalar(e); }},
        {"sbx_eta", [](ExperimentConfig& c, const Entry& e) { c.params.variation.sbx_eta = positive_real(e); }},
        {"sbx_prob", [](ExperimentConfig& c, const Entry& e) { c.params.variation.sbx_prob = real_in(e, 0.0, 1.0); }},
        {"sbx_gene_prob",
         [](ExperimentConfig& c, const Entry& e) { c.params.variation.sbx_gene_prob = real_in(e, 0.0, 1.0); }},
        {"pm_eta", [](ExperimentConfig& c, const Entry& e) { c.params.variation.pm_eta = positive_real(e); }},
        {"pm_prob",
         [](ExperimentConfig& c, const Entry& e) {
             c.params.variation.pm_prob = scalar(e) == "auto" ? -1.0 : real_in(e, 0.0, 1.0);
         }},
        {"bound_lo", [](ExperimentConfig& c, const Entry& e) { c.params.variation.bounds.lo = real(e); }},
        {"bound_hi", [](ExperimentConfig& c, const Entry& e) { c.params.variation.bounds.hi = real(e); }},
        {"de_f", [](ExperimentConfig& c, const Entry& e) { c.params.de_f = real_in(e, 0.0, 2.0); }},
        {"de_cr", [](ExperimentConfig& c, const Entry& e) { c.params.de_cr = real_in(e, 0.0, 1.0); }},
        {"pso_inertia", [](ExperimentConfig& c, const Entry& e) { c.params.pso_inertia = real(e); }},
        {"pso_c1", [](ExperimentConfig& c, const Entry& e) { c.params.pso_c1 = real(e); }},
        {"pso_c2", [](ExperimentConfig& c, const Entry& e) { c.params.pso_c2 = real(e); }},
        {"rnsga2_epsilon", [](ExperimentConfig& c, const Entry& e) { c.params.rnsga2_epsilon = positive_real(e); }},
        {"rnsga2_reference_points",
         [](ExperimentConfig& c, const Entry& e) {
             if (!e.value.is_list)
                 throw ConfigError(e.line, "'rnsga2_reference_points' expects a list of points");
             c.params.rnsga2_reference_points.clear();
             for (const auto& item : e.value.items) {
                 if (!item.is_list)
                     throw ConfigError(e.line, "'rnsga2_reference_points' entries must be lists like [0, 1]");
                 ObjectiveVector p;
                 for (const auto& x : item.items) {
                     if (x.is_list)
                         throw ConfigError(e.line, "reference point coordinates must be numbers");
                     p.push_back(parse_number<double>(e, x.scalar));
                 }
                 c.params.rnsga2_reference_points.push_back(std::move(p));
             }
         }},
    };
    return table;
}

} // namespace

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig c;
    std::set<std::string, std::less<>> seen;
    int bounds_line = 0;
    int refs_line = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, "expected 'key = value'");
        Entry e;
        e.key = std::string(trim(line.substr(0, eq)));
        e.line = line_no;
        e.value = ValueParser(trim(line.substr(eq + 1)), line_no).parse();

        const auto h = handlers().find(e.key);
        if (h == handlers().end())
            throw ConfigError(line_no, "unknown key '" + e.key + "'");
        if (!seen.insert(e.key).second)
            throw ConfigError(line_no, "key '" + e.key + "' given twice");
        h->second(c, e);
        if (e.key == "bound_lo" || e.key == "bound_hi")
            bounds_line = line_no;
        if (e.key == "rnsga2_reference_points")
            refs_line = line_no;
    }

    if (c.environment.empty())
        throw ConfigError(0, "missing required key 'environment'");
    if (c.algorithms.empty())
        throw ConfigError(0, "missing required key 'algorithms' (or the list is empty)");
    if (!(c.params.variation.bounds.lo < c.params.variation.bounds.hi))
        throw ConfigError(bounds_line, "'bound_lo' must be smaller than 'bound_hi'");
    const auto env = make_env(c.environment);
    for (const auto& r : c.params.rnsga2_reference_points)
        if (static_cast<int>(r.size()) != env.objectives)
            throw ConfigError(refs_line, "reference point dimension does not match the environment's " +
                                             std::to_string(env.objectives) + " objectives");
    for (auto a : c.algorithms) {
        if (a == Algorithm::DE && c.pop_size < 4)
            throw ConfigError(0, "DE needs pop_size >= 4");
        if (a == Algorithm::SMSEMOA && env.objectives > 3)
            throw ConfigError(0, "SMSEMOA supports at most 3 objectives");
    }
    return c;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& c)
{
    std::ostringstream o;
    const auto& v = c.params.variation;
    o << "environment = " << c.environment << '\n';
    if (c.sigma)
        o << "sigma = " << format_double(*c.sigma) << '\n';
    o << "n_layer1 = " << c.layers[0] << '\n';
    o << "n_layer2 = " << c.layers[1] << '\n';
    o << "n_layer3 = " << c.layers[2] << '\n';
    o << "algorithms = [";
    for (std::size_t i = 0; i < c.algorithms.size(); ++i)
        o << (i ? ", " : "") << algorithm_name(c.algorithms[i]);
    o << "]\n";
    o << "pop_size = " << c.pop_size << '\n';
    o << "generations = " << c.generations << '\n';
    o << "n_episodes = " << c.n_episodes << '\n';
    o << "n_runs = " << c.n_runs << '\n';
    o << "master_seed = " << c.master_seed << '\n';
    if (!c.output_dir.empty())
        o << "output_dir = " << c.output_dir << '\n';
    o << "sbx_eta = " << format_double(v.sbx_eta) << '\n';
    o << "sbx_prob = " << format_double(v.sbx_prob) << '\n';
    o << "sbx_gene_prob = " << format_double(v.sbx_gene_prob) << '\n';
    o << "pm_eta = " << format_double(v.pm_eta) << '\n';
    o << "pm_prob = " << (v.pm_prob < 0.0 ? std::string("auto") : format_double(v.pm_prob)) << '\n';
    o << "bound_lo = " << format_double(v.bounds.lo) << '\n';
    o << "bound_hi = " << format_double(v.bounds.hi) << '\n';
    o << "de_f = " << format_double(c.params.de_f) << '\n';
    o << "de_cr = " << format_double(c.params.de_cr) << '\n';
    o << "pso_inertia = " << format_double(c.params.pso_inertia) << '\n';
    o << "pso_c1 = " << format_double(c.params.pso_c1) << '\n';
    o << "pso_c2 = " << format_double(c.params.pso_c2) << '\n';
    o << "rnsga2_epsilon = " << format_double(c.params.rnsga2_epsilon) << '\n';
    o << "rnsga2_reference_points = [";
    for (std::size_t i = 0; i < c.params.rnsga2_reference_points.size(); ++i) {
        o << (i ? ", " : "") << '[';
        const auto& p = c.params.rnsga2_reference_points[i];
        for (std::size_t j = 0; j < p.size(); ++j)
            o << (j ? ", " : "") << format_double(p[j]);
        o << ']';
    }
    o << "]\n";
    return o.str();
}

} // namespace morl
