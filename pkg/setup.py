#!/usr/bin/env python3

from setuptools import setup  # type: ignore

setup()

