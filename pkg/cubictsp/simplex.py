"""
Exact rational linear algebra for the matching decomposition.

:class:`ExactSimplex` is a phase-one simplex over :class:`fractions.Fraction` for the system
``A x = b, x >= 0`` whose columns arrive one at a time, as column generation needs.
Pivoting follows Bland's rule among the known columns, so it terminates as long as
the pricing oracle only returns columns with negative reduced cost.

>>> lp=ExactSimplex([Fraction(1), Fraction(1)])
>>> lp.add_column([Fraction(1), Fraction(0)]), lp.add_column([Fraction(0), Fraction(1)])
(0, 1)
>>> lp.run(lambda duals: None)
True
>>> lp.solution()
{0: Fraction(1, 1), 1: Fraction(1, 1)}
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Optional, Sequence

logger=logging.getLogger(__name__)

Column=tuple[Fraction, ...]

class IterationLimit(RuntimeError): pass


class ExactSimplex:
	"""
	Artificial variables form the starting basis; basis entries ``>= 0`` are structural column
	indices, entry ``-1-i`` is the artificial variable of row ``i``.
	"""
	def __init__(self, b: Sequence[Fraction], *, max_iterations: int=100000)->None:
		assert all(v>=0 for v in b)
		self.rows=len(b)
		self.columns: list[Column]=[]
		self.basis: list[int]=[-1-i for i in range(self.rows)]
		self.inverse: list[list[Fraction]]=[[Fraction(int(i==j)) for j in range(self.rows)] for i in range(self.rows)]
		self.values: list[Fraction]=[Fraction(v) for v in b]
		self.max_iterations=max_iterations
		self.iterations=0

	def add_column(self, column: Sequence[Fraction])->int:
		assert len(column)==self.rows
		self.columns.append(tuple(Fraction(a) for a in column))
		return len(self.columns)-1

	@property
	def objective(self)->Fraction:
		"""
		Sum of the artificial variables.
		"""
		return sum((x for j, x in zip(self.basis, self.values) if j<0), Fraction(0))

	def duals(self)->list[Fraction]:
		costs=[Fraction(int(j<0)) for j in self.basis]
		return [sum((costs[i]*self.inverse[i][r] for i in range(self.rows)), Fraction(0)) for r in range(self.rows)]

	def reduced_cost(self, column: Sequence[Fraction], duals: Sequence[Fraction])->Fraction:
		return -sum((y*a for y, a in zip(duals, column) if a), Fraction(0))

	def _key(self, j: int)->int:
		return -1-j if j<0 else self.rows+j

	def pivot(self, entering: int)->None:
		column=self.columns[entering]
		d=[sum((self.inverse[i][r]*column[r] for r in range(self.rows) if column[r]), Fraction(0)) for i in range(self.rows)]
		candidates=[(self.values[i]/d[i], self._key(self.basis[i]), i) for i in range(self.rows) if d[i]>0]
		assert candidates, "phase one is bounded"
		theta, _, leaving=min(candidates)
		pivot_value=d[leaving]
		self.inverse[leaving]=[a/pivot_value for a in self.inverse[leaving]]
		for i in range(self.rows):
			if i!=leaving and d[i]:
				factor=d[i]
				self.inverse[i]=[a-factor*b for a, b in zip(self.inverse[i], self.inverse[leaving])]
				self.values[i]-=theta*factor
		self.values[leaving]=theta
		self.basis[leaving]=entering
		self.iterations+=1
		if self.iterations>self.max_iterations: raise IterationLimit(f"no convergence after {self.max_iterations} pivots")

	def run(self, price: Callable[[list[Fraction]], Optional[Sequence[Fraction]]])->bool:
		"""
		Pivot until the artificial variables vanish. Return ``False`` if the system is infeasible.

		:param price: given the duals, return a new column with negative reduced cost, or ``None`` if there is none.
		"""
		while self.objective>0:
			duals=self.duals()
			entering=next((j for j, column in enumerate(self.columns) if self.reduced_cost(column, duals)<0), None)
			if entering is None:
				column=price(duals)
				if column is None: return False
				assert self.reduced_cost(column, duals)<0, "pricing returned a column that cannot improve"
				entering=self.add_column(column)
				logger.debug("priced column %d, objective %s", entering, self.objective)
			self.pivot(entering)
		return True

	def solution(self)->dict[int, Fraction]:
		"""
		Positive structural variables, by column index.
		"""
		return {j: x for j, x in sorted(zip(self.basis, self.values)) if j>=0 and x>0}


def null_vector(vectors: Sequence[Sequence[Fraction]])->Optional[list[Fraction]]:
	"""
	Nonzero coefficients ``mu`` with ``sum(mu[j]*vectors[j]) == 0``, or ``None`` if the vectors are independent.

	>>> null_vector([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)]])
	[Fraction(-1, 1), Fraction(-1, 1), Fraction(1, 1)]
	>>> null_vector([[Fraction(1), Fraction(2)]]) is None
	True
	"""
	count=len(vectors)
	if count==0: return None
	dimension=len(vectors[0])
	# row reduce the matrix whose columns are the vectors
	matrix=[[Fraction(vectors[j][r]) for j in range(count)] for r in range(dimension)]
	pivots: list[int]=[]
	row=0
	for col in range(count):
		found=next((r for r in range(row, dimension) if matrix[r][col]), None)
		if found is None: continue
		matrix[row], matrix[found]=matrix[found], matrix[row]
		scale=matrix[row][col]
		matrix[row]=[a/scale for a in matrix[row]]
		for r in range(dimension):
			if r!=row and matrix[r][col]:
				factor=matrix[r][col]
				matrix[r]=[a-factor*b for a, b in zip(matrix[r], matrix[row])]
		pivots.append(col)
		row+=1
		if row==dimension: break
	free=next((col for col in range(count) if col not in pivots), None)
	if free is None: return None
	result=[Fraction(0)]*count
	result[free]=Fraction(1)
	for r, col in enumerate(pivots):
		result[col]=-matrix[r][free]
	return result

def caratheodory_prune(points: Sequence[Sequence[Fraction]], weights: Sequence[Fraction])->dict[int, Fraction]:
	"""
	Rewrite the convex combination ``sum(weights[j]*points[j])`` over affinely independent points.

	Returns the surviving indices with their new weights.

	>>> half=Fraction(1, 2)
	>>> caratheodory_prune([[Fraction(0)], [Fraction(1)], [half]], [Fraction(1, 4), Fraction(1, 4), half])
	{0: Fraction(1, 2), 1: Fraction(1, 2)}
	"""
	assert all(w>0 for w in weights)
	current={j: Fraction(w) for j, w in enumerate(weights)}
	while True:
		alive=sorted(current)
		mu=null_vector([[*points[j], Fraction(1)] for j in alive])
		if mu is None: return current
		if not any(m>0 for m in mu): mu=[-m for m in mu]
		t=min(current[j]/m for j, m in zip(alive, mu) if m>0)
		for j, m in zip(alive, mu):
			current[j]-=t*m
		current={j: w for j, w in current.items() if w!=0}
