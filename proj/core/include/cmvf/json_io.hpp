#pragma once

#include <iosfwd>
#include <string>

#include "cmvf/mvf.hpp"

namespace cmvf {

/// Complex exchange format:
///   { "cells": [{"id": "<label>", "dim": <int>}, ...],
///     "kappa": [["<x>", "<y>", <coeff>], ...] }
/// Coefficients are integers interpreted in the chosen field on load.
std::string complex_to_json(const LefschetzComplex& cx);
LefschetzComplex complex_from_json(const std::string& text, Coeff field);

/// Field exchange format: {"theta": {"<cell>": "<cell>", ...}} or
/// {"partition": [["<cell>", ...], ...]}. Emission is always the canonical
/// theta form with lexicographically ordered keys.
std::string field_to_json(const MultivectorField& field);
MultivectorField field_from_json(const std::string& text, const LefschetzComplex& cx);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace cmvf
