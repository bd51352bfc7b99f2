"""
Global configuration and logging setup.

Library functions accept an optional ``config`` keyword argument; when it is omitted
they read :data:`default_config`, which :func:`use_config` swaps temporarily::

	with use_config(GlobalConfiguration(check_lift_bound=False)):
		...
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from dataclasses import dataclass
from typing import Iterator, Literal, Optional

DecompositionMethod=Literal["auto", "column-generation", "enumerate"]


@dataclass(frozen=True)
class GlobalConfiguration:
	"""
	Represents the configuration.

	This will be parsed from command-line argument in :mod:`cubictsp.cli` using :meth:`from_args`.
	It is immutable, switch to a different one with :func:`use_config`.
	"""
	debug: int=0
	oracle_vertex_limit: int=16
	oracle_multigraph_limit: int=12
	verify_step_dimension_limit: int=14
	check_lift_bound: bool=True
	check_clean_bound: bool=True
	decomposition_method: DecompositionMethod="auto"

	def __post_init__(self)->None:
		assert 0<=self.debug<=9
		assert self.oracle_vertex_limit>0
		assert self.oracle_multigraph_limit>0
		assert 0<self.verify_step_dimension_limit<=24
		assert self.decomposition_method in ("auto", "column-generation", "enumerate")

	@staticmethod
	def from_args(args: argparse.Namespace)->GlobalConfiguration:
		return GlobalConfiguration(
				debug=args.debug,
				oracle_vertex_limit=getattr(args, "limit", None) or GlobalConfiguration.oracle_vertex_limit,
				decomposition_method=getattr(args, "decomposition", "auto"),
				)


default_config=GlobalConfiguration()

def get_config(config: Optional[GlobalConfiguration]=None)->GlobalConfiguration:
	return default_config if config is None else config

@contextlib.contextmanager
def use_config(config: GlobalConfiguration)->Iterator[GlobalConfiguration]:
	"""
	>>> with use_config(GlobalConfiguration(debug=3)):
	...     get_config().debug
	3
	>>> get_config().debug
	0
	"""
	global default_config
	old_config=default_config
	default_config=config
	try:
		yield config
	finally:
		default_config=old_config

def log_level(debug: int)->int:
	"""
	>>> log_level(0)==logging.WARNING, log_level(2)==logging.INFO, log_level(7)==logging.DEBUG
	(True, True, True)
	"""
	if debug<=0: return logging.WARNING
	if debug<5: return logging.INFO
	return logging.DEBUG

def setup_logging(debug: int)->None:
	logger=logging.getLogger("cubictsp")
	logger.setLevel(log_level(debug))
	if not any(getattr(h, "_cubictsp", False) for h in logger.handlers):
		handler=logging.StreamHandler(sys.stderr)
		handler.setFormatter(logging.Formatter("[%(name)s] %(levelname)s %(message)s"))
		handler._cubictsp=True  # type: ignore
		logger.addHandler(handler)
