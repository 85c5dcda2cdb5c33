#include "elaa/format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace elaa {

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return {buffer, ptr};
}

}  // namespace elaa
