import unittest
import pickle

from rankloci.core import chow
from rankloci.core.chow import Partition
from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorContextMismatch
from rankloci.core.exception import ErrorNotInvertible

from rankloci.test.test_case import TestCase


class TestUnit(TestCase):

    #---------------------------------------------------------------------------
    # Partition

    def test_partition_a(self) -> None:
        p = Partition((2, 1, 0, 0))
        self.assertEqual(p, (2, 1))
        self.assertEqual(p.size, 3)
        self.assertEqual(p.to_bracket(), '[2,1]')
        self.assertEqual(Partition().to_bracket(), '[]')

    def test_partition_b(self) -> None:
        with self.assertRaises(ErrorPrecondition):
            Partition((1, 2))
        with self.assertRaises(ErrorPrecondition):
            Partition((2, -1))
        with self.assertRaises(ErrorPrecondition):
            Partition((1.5,))

    def test_partition_c(self) -> None:
        self.assertEqual(Partition((3, 1)).conjugate(), (2, 1, 1))
        self.assertEqual(Partition((2, 2)).conjugate(), (2, 2))
        self.assertEqual(Partition().conjugate(), ())
        self.assertEqual(Partition((2,)).padded(3), (2, 0, 0))

    #---------------------------------------------------------------------------
    # GrassmannContext

    def test_context_a(self) -> None:
        ctx = GrassmannContext.from_rank(7, 2)
        self.assertEqual(ctx.k, 5)
        self.assertEqual(ctx.r, 2)
        self.assertEqual(ctx.width, 2)
        self.assertEqual(ctx.dim, 10)
        self.assertEqual(ctx.box, (2, 2, 2, 2, 2))

    def test_context_b(self) -> None:
        self.assertEqual(GrassmannContext(0, 4).box, ())
        self.assertEqual(GrassmannContext(4, 4).box, ())
        self.assertEqual(GrassmannContext(4, 4).dim, 0)
        with self.assertRaises(ErrorPrecondition):
            GrassmannContext(5, 4)
        with self.assertRaises(ErrorPrecondition):
            GrassmannContext(-1, 4)

    def test_context_c(self) -> None:
        ctx = GrassmannContext(2, 4)
        self.assertTrue(ctx.fits((2, 2)))
        self.assertFalse(ctx.fits((3,)))
        self.assertFalse(ctx.fits((1, 1, 1)))
        self.assertEqual(hash(ctx), hash(GrassmannContext(2, 4)))
        self.assertNotEqual(ctx, GrassmannContext(1, 4))
        self.assertEqual(pickle.loads(pickle.dumps(ctx)), ctx)

    #---------------------------------------------------------------------------
    # ChowElement

    def test_element_a(self) -> None:
        ctx = GrassmannContext(2, 4)
        a = ChowElement(ctx, {(1, 1): 3, (2,): -1})
        self.assertEqual(a.to_text(), '3·σ[1,1] - σ[2]')
        self.assertEqual(str(ChowElement.unit(ctx)), '1')
        self.assertEqual(str(ChowElement.zero(ctx)), '0')
        self.assertEqual(str(-ChowElement.from_partition(ctx, (1,))), '-σ[1]')

    def test_element_b(self) -> None:
        ctx = GrassmannContext(2, 4)
        with self.assertRaises(ErrorPrecondition):
            ChowElement(ctx, {(3,): 1})
        self.assertFalse(ChowElement.from_partition(ctx, (3,)))
        a = ChowElement(ctx, {(1,): 2, (1, 0): -2})
        self.assertEqual(a, 0)

    def test_element_c(self) -> None:
        ctx = GrassmannContext(2, 4)
        a = ChowElement(ctx, {(): 1, (1,): 2})
        b = ChowElement(ctx, {(1,): -2, (2, 1): 5})
        self.assertChowEqual(a + b, {(): 1, (2, 1): 5})
        self.assertChowEqual(a - b, {(): 1, (1,): 4, (2, 1): -5})
        self.assertChowEqual(1 - a, {(1,): -2})
        self.assertChowEqual(a + 2, {(): 3, (1,): 2})
        self.assertChowEqual(3 * b, {(1,): -6, (2, 1): 15})
        self.assertEqual(a.constant, 1)
        self.assertEqual(b.coefficient((2, 1)), 5)
        self.assertEqual(b.min_degree, 1)

    def test_element_d(self) -> None:
        a = ChowElement.unit(GrassmannContext(2, 4))
        b = ChowElement.unit(GrassmannContext(1, 4))
        with self.assertRaises(ErrorContextMismatch):
            a + b
        with self.assertRaises(ErrorContextMismatch):
            chow.mul(a.context, a, b)

    def test_element_e(self) -> None:
        ctx = GrassmannContext(2, 4)
        a = ChowElement(ctx, {(): 1, (1,): 1, (2, 2): 4})
        self.assertChowEqual(a.degree_part(1), {(1,): 1})
        self.assertEqual([p for p, _ in a.items()], [(), (1,), (2, 2)])
        self.assertEqual(hash(a), hash(ChowElement(ctx, {(2, 2): 4, (1,): 1, (): 1})))

    def test_element_f(self) -> None:
        ctx = GrassmannContext(2, 4)
        h = ChowElement.from_partition(ctx, (1,))
        self.assertChowEqual(h ** 0, {(): 1})
        self.assertChowEqual(h ** 2, {(2,): 1, (1, 1): 1})
        self.assertChowEqual(h ** 4, {(2, 2): 2})
        self.assertFalse(h ** 5)
        with self.assertRaises(ErrorPrecondition):
            h ** -1

    #---------------------------------------------------------------------------
    # special classes

    def test_special_s_a(self) -> None:
        ctx = GrassmannContext(2, 3)
        self.assertEqual(chow.special_s(ctx, 0), 1)
        self.assertEqual(chow.special_s(ctx, 3), 0)
        self.assertEqual(chow.special_s(ctx, -1), 0)
        self.assertChowEqual(chow.special_s(ctx, 1), {(1,): 1})
        self.assertChowEqual(chow.special_s(ctx, 2), {(1, 1): 1})

    def test_special_q_a(self) -> None:
        self.assertEqual(chow.special_q(GrassmannContext(2, 3), 0), 1)
        self.assertChowEqual(chow.special_q(GrassmannContext(1, 3), 2), {(2,): 1})
        self.assertChowEqual(chow.special_q(GrassmannContext(1, 2), 1), {(1,): -1})
        self.assertEqual(chow.special_q(GrassmannContext(2, 3), 2), 0)

    def test_total_s_a(self) -> None:
        self.assertChowEqual(chow.total_s(GrassmannContext(1, 2)), {(): 1, (1,): 1})
        self.assertChowEqual(chow.total_s(GrassmannContext(2, 3)),
                {(): 1, (1,): 1, (1, 1): 1})
        self.assertEqual(chow.total_s(GrassmannContext(0, 5)), 1)

    def test_total_s_power_a(self) -> None:
        ctx = GrassmannContext(2, 4)
        self.assertEqual(chow.total_s_power(ctx, 3), chow.total_s(ctx) ** 3)
        self.assertEqual(chow.total_s_power(ctx, 0), 1)

    def test_basis_a(self) -> None:
        self.assertEqual(chow.basis(GrassmannContext(2, 4)),
                ((), (1,), (1, 1), (2,), (2, 1), (2, 2)))
        self.assertEqual(chow.basis(GrassmannContext(0, 3)), ((),))
        self.assertEqual(len(chow.basis(GrassmannContext(3, 7))), 35)

    #---------------------------------------------------------------------------
    # Pieri rules

    def test_pieri_row_a(self) -> None:
        ctx = GrassmannContext(2, 4)
        self.assertEqual(chow.pieri_row(ctx, (1,), 1), {(2,), (1, 1)})
        self.assertEqual(chow.pieri_row(ctx, (2, 1), 1), {(2, 2)})
        self.assertEqual(chow.pieri_row(ctx, (1,), 2), {(2, 1)})
        self.assertEqual(chow.pieri_row(ctx, (2, 1), 0), {(2, 1)})

    def test_pieri_row_b(self) -> None:
        ctx = GrassmannContext(2, 4)
        with self.assertRaises(ErrorPrecondition):
            chow.pieri_row(ctx, (3,), 1)
        with self.assertRaises(ErrorPrecondition):
            chow.pieri_row(ctx, (1,), 3)

    def test_pieri_col_a(self) -> None:
        ctx = GrassmannContext(2, 4)
        self.assertEqual(chow.pieri_col(ctx, (1,), 1), {(2,), (1, 1)})
        self.assertEqual(chow.pieri_col(ctx, (1, 1), 2), {(2, 2)})
        self.assertEqual(chow.pieri_col(ctx, (1,), 2), {(2, 1)})
        self.assertEqual(chow.pieri_col(ctx, (1,), 0), {(1,)})

    def test_pieri_col_b(self) -> None:
        ctx = GrassmannContext(3, 5)
        self.assertEqual(chow.pieri_col(ctx, (2, 1), 2), {(2, 2, 1)})
        self.assertEqual(chow.pieri_col(ctx, (2, 2, 2), 1), frozenset())

    #---------------------------------------------------------------------------
    # multiplication

    def test_schur_to_elementary_a(self) -> None:
        self.assertEqual(chow.schur_to_elementary(2, Partition((1,))), (((1,), 1),))
        # s_2 = e_1^2 - e_2
        self.assertEqual(chow.schur_to_elementary(2, Partition((2,))),
                (((1, 1), 1), ((2,), -1)))
        # s_11 = e_2
        self.assertEqual(chow.schur_to_elementary(2, Partition((1, 1))), (((2,), 1),))
        # e_3 vanishes with two variables
        self.assertEqual(chow.schur_to_elementary(2, Partition((1, 1, 1))), ())

    def test_mul_a(self) -> None:
        ctx = GrassmannContext(2, 4)
        s = lambda *parts: ChowElement.from_partition(ctx, parts)
        self.assertChowEqual(chow.mul(ctx, s(1), s(1)), {(2,): 1, (1, 1): 1})
        self.assertChowEqual(chow.mul(ctx, s(2, 1), s(1)), {(2, 2): 1})
        self.assertChowEqual(chow.mul(ctx, s(2), s(2)), {(2, 2): 1})
        self.assertChowEqual(chow.mul(ctx, s(1, 1), s(1, 1)), {(2, 2): 1})
        self.assertEqual(chow.mul(ctx, s(2), s(1, 1)), 0)

    def test_mul_b(self) -> None:
        ctx = GrassmannContext(3, 6)
        s = lambda *parts: ChowElement.from_partition(ctx, parts)
        # σ21·σ21 in G(3,6)
        self.assertChowEqual(chow.mul(ctx, s(2, 1), s(2, 1)),
                {(3, 3): 1, (3, 2, 1): 2, (2, 2, 2): 1})

    def test_mul_c(self) -> None:
        for ctx in self.get_contexts(5):
            for p in chow.basis(ctx):
                a = ChowElement.from_partition(ctx, p)
                self.assertEqual(chow.mul(ctx, a, ChowElement.unit(ctx)), a)
                self.assertEqual(chow.mul(ctx, ChowElement.zero(ctx), a), 0)

    def test_mul_d(self) -> None:
        ctx = GrassmannContext(2, 5)
        elements = [ChowElement.from_partition(ctx, p) for p in chow.basis(ctx)]
        for a in elements:
            for b in elements:
                ab = chow.mul(ctx, a, b)
                self.assertEqual(ab, chow.mul(ctx, b, a))
                for p, _ in ab.items():
                    self.assertEqual(p.size, a.min_degree + b.min_degree)

    #---------------------------------------------------------------------------
    # inverse

    def test_inverse_a(self) -> None:
        ctx = GrassmannContext(1, 2)
        self.assertEqual(chow.inverse(ctx, ChowElement.unit(ctx)), 1)
        self.assertChowEqual(chow.inverse(ctx, chow.total_s(ctx)), {(): 1, (1,): -1})

    def test_inverse_b(self) -> None:
        for ctx in self.get_contexts(6):
            self.assertEqual(chow.inverse(ctx, chow.total_s(ctx)), chow.total_q(ctx))
            self.assertEqual(chow.mul(ctx, chow.total_s(ctx), chow.total_q(ctx)), 1)

    def test_inverse_c(self) -> None:
        ctx = GrassmannContext(2, 4)
        with self.assertRaises(ErrorNotInvertible):
            chow.inverse(ctx, ChowElement.unit(ctx, 2))
        with self.assertRaises(ErrorNotInvertible):
            chow.inverse(ctx, ChowElement.from_partition(ctx, (1,)))
        a = ChowElement.from_partition(ctx, (1,)) - 1
        self.assertEqual(chow.mul(ctx, a, chow.inverse(ctx, a)), 1)

    #---------------------------------------------------------------------------
    # integration

    def test_integral_a(self) -> None:
        ctx = GrassmannContext(1, 2)
        self.assertEqual(chow.integral(ctx, chow.special_s(ctx, 1)), 1)
        ctx = GrassmannContext(2, 3)
        self.assertEqual(chow.integral(ctx, chow.total_s(ctx) ** 3), 6)
        self.assertEqual(chow.integral(ctx, ChowElement.unit(ctx)), 0)
        ctx = GrassmannContext(0, 3)
        self.assertEqual(chow.integral(ctx, ChowElement.unit(ctx, 5)), 5)

    def test_integral_b(self) -> None:
        for ctx in self.get_contexts(6, min_k=1):
            self.assertEqual(
                    chow.integral(ctx, chow.total_s(ctx) ** ctx.n),
                    chow.deg_sigma(ctx.n, ctx.k))

    def test_complement_a(self) -> None:
        ctx = GrassmannContext(2, 4)
        self.assertEqual(chow.complement(ctx, (1,)), (2, 1))
        self.assertEqual(chow.complement(ctx, ()), (2, 2))
        self.assertEqual(chow.complement(ctx, (2, 2)), ())
        self.assertEqual(chow.complement(GrassmannContext(3, 7), (4, 1)), (4, 3))

    def test_integral_product_a(self) -> None:
        ctx = GrassmannContext(3, 6)
        a = chow.total_s(ctx) ** 4
        b = 1 - chow.total_q(ctx) * chow.special_s(ctx, 2)
        self.assertEqual(chow.integral_product(ctx, a, b),
                chow.integral(ctx, chow.mul(ctx, a, b)))

    def test_deg_sigma_a(self) -> None:
        for n in range(1, 9):
            self.assertEqual(chow.deg_sigma(n, 1), n)
            self.assertEqual(chow.deg_sigma(n, 0), 1)
        self.assertEqual(chow.deg_sigma(3, 2), 6)
        self.assertEqual(chow.deg_sigma(4, 2), 20)
        self.assertEqual(chow.deg_sigma(7, 6), 924)
        with self.assertRaises(ErrorPrecondition):
            chow.deg_sigma(3, 4)


if __name__ == '__main__':
    unittest.main()
