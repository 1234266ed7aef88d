#include "umbral/io.hpp"

#include <fstream>
#include <sstream>

namespace umbral {

json to_json(const Scalar& s)
{
    if (s.is_exact())
        return s.as_rational().get_str();
    const auto& z = s.as_complex();
    return json::array({z.real(), z.imag()});
}

json to_json(std::span<const Scalar> values)
{
    json out = json::array();
    for (const auto& v : values)
        out.push_back(to_json(v));
    return out;
}

json to_json(const Polynomial& p)
{
    return to_json(std::span<const Scalar>(p.coefficients()));
}

json to_json(const MonicPolySystem& p)
{
    json polys = json::array();
    for (const auto& poly : p.polys())
        polys.push_back(to_json(poly));
    return {{"b", to_json(std::span<const Scalar>(p.b_values()))},
            {"u", to_json(std::span<const Scalar>(p.u_values()))},
            {"h", to_json(std::span<const Scalar>(p.h_values()))},
            {"polys", std::move(polys)}};
}

Scalar scalar_from_json(const json& j, Mode mode)
{
    if (j.is_string())
        return Scalar::parse(j.get<std::string>(), mode);
    if (j.is_number_integer())
        return Scalar::integer(j.get<long>(), mode);
    if (j.is_number())
        return mode == Mode::exact ? Scalar::parse(j.dump(), mode)
                                   : Scalar::floating(j.get<double>());
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        if (mode == Mode::exact) {
            if (j[1].get<double>() != 0.0)
                throw ParameterError("complex value " + j.dump() + " in exact mode");
            return scalar_from_json(j[0], mode);
        }
        return Scalar::floating(j[0].get<double>(), j[1].get<double>());
    }
    throw ParameterError("not a scalar: " + j.dump());
}

std::vector<Scalar> parse_scalar_list(std::string_view text, Mode mode)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw InsufficientData("empty scalar list");
    std::vector<Scalar> out;
    if (text[first] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParameterError(std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_array())
            throw ParameterError("expected a JSON array of scalars");
        for (const auto& v : j)
            out.push_back(scalar_from_json(v, mode));
        return out;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        // tolerate a trailing comma or an index column "n,value"
        auto comma = line.rfind(',');
        if (comma != std::string::npos && line.find_first_not_of(" \t\r", comma + 1) == std::string::npos)
            line.erase(comma), comma = line.rfind(',');
        out.push_back(Scalar::parse(comma == std::string::npos ? line : line.substr(comma + 1), mode));
    }
    if (out.empty())
        throw InsufficientData("empty scalar list");
    return out;
}

std::vector<Scalar> read_scalar_file(const std::filesystem::path& path, Mode mode)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scalar_list(buf.str(), mode);
}

std::string csv_cell(const Scalar& s)
{
    return s.to_string();
}

json report_to_json(const ClassicalReport& rep, const Tolerance& tol)
{
    json out;
    const bool main_ok = !rep.main_system || rep.main_system->pass;
    out["verdict"] = rep.verdict && main_ok;
    out["status"] = std::string(to_string(rep.status));
    out["depth"] = rep.depth;

    out["max_residual"] = nullptr;
    out["failing_cell"] = nullptr;
    if (rep.main_system) {
        out["max_residual"] = to_json(rep.main_system->max_residual);
        if (rep.main_system->failing_cell)
            out["failing_cell"] = *rep.main_system->failing_cell;
    }
    if (out["failing_cell"].is_null() && !rep.gram.pass && rep.gram.worst_offdiagonal)
        out["failing_cell"] = {rep.gram.worst_offdiagonal->row, rep.gram.worst_offdiagonal->col};

    out["band_width"] = nullptr;
    if (rep.r) {
        const BandInfo band = rep.r->band(tol);
        if (band.local)
            out["band_width"] = band.width;
        else
            out["band_width"] = "nonlocal";
    }

    json gram;
    gram["pass"] = rep.gram.pass;
    gram["worst_offdiagonal"] = nullptr;
    if (rep.gram.worst_offdiagonal) {
        const auto& w = *rep.gram.worst_offdiagonal;
        gram["worst_offdiagonal"] = {{"cell", {w.row, w.col}}, {"value", to_json(w.value)}};
    }
    gram["zero_diagonal"] = nullptr;
    if (rep.gram.zero_diagonal)
        gram["zero_diagonal"] = *rep.gram.zero_diagonal;
    out["gram"] = std::move(gram);
    out["tau_degenerate_at"] = nullptr;
    if (rep.tau_degenerate_at)
        out["tau_degenerate_at"] = *rep.tau_degenerate_at;
    return out;
}

} // namespace umbral
