import pytest

from cubictsp.config import GlobalConfiguration, use_config

@pytest.fixture(autouse=True)
def _setup_default_config(doctest_namespace):
	from cubictsp.graph import Graph, named
	doctest_namespace["Graph"]=Graph
	doctest_namespace["named"]=named
	with use_config(GlobalConfiguration()):
		yield
