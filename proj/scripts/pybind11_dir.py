#!/usr/bin/env python3
"""Prints pybind11's CMake config directory, for builds without a system package."""
import pybind11

print(pybind11.get_cmake_dir())
