#include "netfex/value.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace netfex {

std::string format_double(double x) {
    std::array<char, 64> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf.data(), end);
}

double parse_double(std::string_view token) {
    double value = 0.0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw std::invalid_argument("not a number: '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace netfex
