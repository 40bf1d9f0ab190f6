"""Golden 16x16 matrices for the n = r = 4 Dipper-Donkin case, transcribed
from the published displays: H, its inverse, Lambda = TT^t H TT, and
Lambda^{-1}."""

H = [
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [-1, -1, -1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [0, -1, -1, -1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0],
    [0, 0, -1, -1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [-1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, -1, -1, -1, 0, -1, -1, -1, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, -1, -1, 0, 0, -1, -1, 0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 1, 1, 1, 1],
    [-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0],
    [0, -1, -1, -1, 0, -1, -1, -1, 0, -1, -1, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 0, -1, -1, 0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0],
]

H_INV = [
    [0, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1],
    [0, 0, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 1, -1],
    [1, 0, 0, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 1],
    [-1, 1, 0, 0, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, -1],
    [1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0],
    [-1, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1],
    [0, -1, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, -1, 1, -1],
    [1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, -1, 1],
    [-1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, -1],
    [1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0],
    [-1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1, -1, 1],
    [0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1, -1],
    [1, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1],
    [-1, 1, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1],
    [1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0],
    [-1, 1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0],
]

LAMBDA = [
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 0, 1, 2, 2, 1],
    [0, 0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 1, 1, 2, 3, 2],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 3, 3],
    [-1, -1, -1, -1, 0, -1, -1, -1, 1, 0, -1, -1, 1, 1, 0, -1],
    [0, -1, -1, -1, 1, 0, -1, -1, 2, 2, 0, -1, 2, 3, 2, 0],
    [0, 0, -1, -1, 1, 1, 0, -1, 2, 3, 2, 0, 2, 4, 4, 2],
    [0, 0, 0, -1, 1, 1, 1, 0, 2, 3, 3, 2, 2, 4, 5, 4],
    [-1, -1, -1, -1, -1, -2, -2, -2, 0, -1, -2, -2, 1, 0, -1, -2],
    [-1, -2, -2, -2, 0, -2, -3, -3, 1, 0, -2, -3, 2, 2, 0, -2],
    [0, -1, -2, -2, 1, 0, -2, -3, 2, 2, 0, -2, 3, 4, 3, 0],
    [0, 0, -1, -2, 1, 1, 0, -2, 2, 3, 2, 0, 3, 5, 5, 3],
    [-1, -1, -1, -1, -1, -2, -2, -2, -1, -2, -3, -3, 0, -1, -2, -3],
    [-1, -2, -2, -2, -1, -3, -4, -4, 0, -2, -4, -5, 1, 0, -2, -4],
    [-1, -2, -3, -3, 0, -2, -4, -5, 1, 0, -3, -5, 2, 2, 0, -3],
    [0, -1, -2, -3, 1, 0, -2, -4, 2, 2, 0, -3, 3, 4, 3, 0],
]

LAMBDA_INV = [
    [0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 1, -1, 1, 0, -1],
    [1, 0, 0, 0, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 1, 0, 0, 0, 0, -1, 1, 0, -1, 1],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 0, -1, 1, 0, 0, 1, 0, -1, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, 0, -1, 1, 0, 0, 1, 0, -1, 0, 0, -1, 1],
    [0, 0, 0, -1, 0, 0, -1, 1, 0, 0, 1, 0, 0, -1, 1, -1],
    [0, 0, 0, 1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, -1, 1],
    [0, 0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 1, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 1, -1, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 1, -1, 1, 0, 0],
]
