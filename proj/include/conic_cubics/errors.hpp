#pragma once

#include <stdexcept>
#include <string>

namespace conic_cubics {

struct NotClassifiable : std::runtime_error {
    explicit NotClassifiable(const std::string& what) : std::runtime_error(what) {}
};

struct ProportionalConics : std::runtime_error {
    explicit ProportionalConics(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyViewport : std::runtime_error {
    explicit EmptyViewport(const std::string& what) : std::runtime_error(what) {}
};

} // namespace conic_cubics
