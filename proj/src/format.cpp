#include "costar/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

namespace costar {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value < 0 ? "-inf" : "inf";

    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
    std::string_view sci(buf, static_cast<std::size_t>(res.ptr - buf));

    std::string out;
    if (sci.front() == '-') {
        out.push_back('-');
        sci.remove_prefix(1);
    }
    const auto e_pos = sci.find('e');
    std::string digits;
    for (char c : sci.substr(0, e_pos))
        if (c != '.') digits.push_back(c);
    const int exp = std::atoi(std::string(sci.substr(e_pos + 1)).c_str());

    if (exp < -4 || exp >= 16) {
        out += digits.substr(0, 1);
        if (digits.size() > 1) {
            out.push_back('.');
            out += digits.substr(1);
        }
        out.push_back('e');
        out.push_back(exp < 0 ? '-' : '+');
        const int mag = std::abs(exp);
        if (mag < 10) out.push_back('0');
        out += std::to_string(mag);
        return out;
    }

    if (exp < 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-exp - 1), '0');
        out += digits;
        return out;
    }
    const auto int_len = static_cast<std::size_t>(exp) + 1;
    if (digits.size() <= int_len) {
        out += digits;
        out.append(int_len - digits.size(), '0');
        out += ".0";
    } else {
        out += digits.substr(0, int_len);
        out.push_back('.');
        out += digits.substr(int_len);
    }
    return out;
}

}  // namespace costar
