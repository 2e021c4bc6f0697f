#include <gysin/cli.hpp>
#include <gysin/errors.hpp>
#include <gysin/oracle.hpp>
#include <gysin/poly_parse.hpp>

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace gysin {

namespace {

std::vector<int> int_list(std::string_view text, std::string_view whole)
{
    std::vector<int> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw InvalidSpace("malformed space '" + std::string(whole) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            return out;
        start = comma + 1;
    }
}

} // namespace

SpaceSpec parse_space(std::string_view text)
{
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InvalidSpace("space '" + std::string(text) + "' lacks a family prefix such as gr:");
    const std::string_view family = text.substr(0, colon);
    const std::string_view args = text.substr(colon + 1);
    SpaceSpec spec;
    if (family == "gr") {
        const auto v = int_list(args, text);
        if (v.size() != 2)
            throw InvalidSpace("expected gr:k,n");
        spec = SpaceSpec::grassmannian(v[0], v[1]);
    } else if (family == "lg") {
        const auto v = int_list(args, text);
        if (v.size() != 1)
            throw InvalidSpace("expected lg:n");
        spec = SpaceSpec::lagrangian(v[0]);
    } else if (family == "og") {
        const auto v = int_list(args, text);
        if (v.size() != 2 || (v[1] != 2 * v[0] && v[1] != 2 * v[0] + 1))
            throw InvalidSpace("expected og:n,2n or og:n,2n+1");
        spec = v[1] == 2 * v[0] ? SpaceSpec::orthogonal_even(v[0]) : SpaceSpec::orthogonal_odd(v[0]);
    } else if (family == "flA" || family == "flC" || family == "flB" || family == "flD") {
        const std::size_t semi = args.find(';');
        if (semi == std::string_view::npos)
            throw InvalidSpace("expected " + std::string(family) + ":d1,...,dk;n");
        const auto d = int_list(args.substr(0, semi), text);
        const auto n = int_list(args.substr(semi + 1), text);
        if (n.size() != 1)
            throw InvalidSpace("expected a single n after ';'");
        const Family f = family == "flA"   ? Family::FlagA
                         : family == "flC" ? Family::FlagC
                         : family == "flB" ? Family::FlagSym2n
                                           : Family::FlagSym2n1;
        spec = SpaceSpec::flag(f, d, n[0]);
    } else {
        throw InvalidSpace("unknown space family '" + std::string(family) + "'");
    }
    spec.validate();
    return spec;
}

Polynomial parse_class(std::string_view text, const SpaceSpec &spec)
{
    spec.validate();
    const int k = spec.blocks();
    ParseOptions opt;
    opt.default_z_group = k;
    opt.check_variable = [&spec, k](const VarId &v, std::size_t pos) {
        const std::string at = " (position " + std::to_string(pos) + ")";
        if (v.block == Block::Z) {
            if (v.group > k || v.slot > spec.d[static_cast<std::size_t>(v.group - 1)])
                throw UnknownVariable(to_string(v) + " is outside " + spec.to_string() + at);
        } else if (v.block == Block::T) {
            if (v.slot > spec.n)
                throw UnknownVariable(to_string(v) + " is outside " + spec.to_string() + at);
        } else {
            throw UnknownVariable(to_string(v) + " cannot appear in a class" + at);
        }
    };
    opt.call = [&spec, k](const std::string &name, const std::vector<int> &idx, const std::string &arg,
                          std::size_t pos) -> Polynomial {
        if (name != "s")
            throw ParseError("unknown function '" + name + "'", pos);
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i] > idx[i - 1])
                throw ParseError("partition must be weakly decreasing", pos);
        std::vector<VarId> vars;
        if (arg == "z") {
            vars = z_block(spec, k);
        } else if (arg == "t") {
            vars = t_block(spec);
        } else if (arg.size() > 3 && arg.rfind("z[", 0) == 0 && arg.back() == ']') {
            int g = 0;
            const char *first = arg.data() + 2;
            const char *last = arg.data() + arg.size() - 1;
            auto [ptr, ec] = std::from_chars(first, last, g);
            if (ec != std::errc() || ptr != last)
                throw ParseError("malformed block '" + arg + "'", pos);
            if (g < 1 || g > k)
                throw UnknownVariable("block " + arg + " is outside " + spec.to_string());
            vars = z_block(spec, g);
        } else {
            throw ParseError("unknown block '" + arg + "'", pos);
        }
        const Partition lambda(idx);
        if (lambda.length() > static_cast<int>(vars.size()))
            return Polynomial();
        return schur_poly(lambda, vars);
    };
    return parse_polynomial(text, opt);
}

std::optional<bool> Report::agree() const
{
    if (!oracle)
        return std::nullopt;
    return *oracle == result;
}

std::string Report::render(OutputFormat format) const
{
    const int degree = result.total_degree();
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["space"] = space;
        j["class"] = class_expr;
        j["result"] = result.to_string();
        j["degree"] = degree < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(degree);
        j["weyl_order"] = weyl_order;
        if (oracle) {
            j["oracle"] = oracle->to_string();
            j["agree"] = *agree();
        }
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "space: " << space << "\n";
    out << "class: " << class_expr << "\n";
    out << "result: " << result.to_string() << "\n";
    out << "degree: " << (degree < 0 ? std::string("none") : std::to_string(degree)) << "\n";
    out << "weyl_order: " << weyl_order << "\n";
    if (oracle) {
        out << "oracle: " << oracle->to_string() << "\n";
        out << "agree: " << (*agree() ? "true" : "false") << "\n";
    }
    out << "time_ms: " << std::fixed << std::setprecision(3) << elapsed_ms << "\n";
    return out.str();
}

Report run(const Request &request)
{
    const auto start = std::chrono::steady_clock::now();
    const Polynomial alpha = parse_class(request.class_expr, request.space);
    const IntegrandPlan plan = request.unsimplified ? build_plan_unsimplified_flag_a(request.space, alpha)
                                                    : build_plan(request.space, alpha);
    Report report;
    report.space = request.space.to_string();
    report.class_expr = request.class_expr;
    report.result = evaluate_plan(plan);
    report.weyl_order = plan.weyl_order;
    if (request.check_oracle)
        report.oracle = abbv_pushforward(request.space, alpha);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<TableRow> lagrangian_schur_table(int n, int max_weight, unsigned threads)
{
    const SpaceSpec spec = SpaceSpec::lagrangian(n);
    spec.validate();
    const auto z = z_block(spec, 1);
    std::vector<TableRow> rows;
    for (int w = 0; w <= max_weight; ++w)
        for (auto &lambda : partitions_of(w, n))
            rows.push_back({lambda.padded(n), decompose_two_mu_plus_rho(lambda, n), Polynomial()});

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                rows[i].result = pushforward(spec, schur_poly(rows[i].lambda, z));
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < count; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::string render_table(const std::vector<TableRow> &rows, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            nlohmann::ordered_json j;
            j["lambda"] = r.lambda.parts;
            j["mu"] = r.mu ? nlohmann::ordered_json(r.mu->parts) : nlohmann::ordered_json(nullptr);
            j["result"] = r.result.to_string();
            arr.push_back(std::move(j));
        }
        return arr.dump() + "\n";
    }
    std::string out = "lambda\tmu\tresult\n";
    for (const auto &r : rows)
        out += r.lambda.to_string() + "\t" + (r.mu ? r.mu->to_string() : std::string("-")) + "\t" +
               r.result.to_string() + "\n";
    return out;
}

std::pair<int, int> parse_table_spec(std::string_view text)
{
    if (text.rfind("pr:", 0) != 0)
        throw InvalidSpace("expected pr:n,maxweight");
    const auto v = int_list(text.substr(3), text);
    if (v.size() != 2 || v[0] < 1 || v[1] < 0)
        throw InvalidSpace("expected pr:n,maxweight with n >= 1");
    return {v[0], v[1]};
}

unsigned thread_budget()
{
    if (const char *env = std::getenv("GYSIN_THREADS")) {
        unsigned value = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value > 0)
            return value;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace gysin
