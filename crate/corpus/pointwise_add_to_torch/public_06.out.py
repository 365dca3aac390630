import torch
def pick_larger(a, b):
    if a >= b:
        return a
    return b
def combine(a, b, mode):
    if mode == 'sum':
        c = torch.add(a, b)
        return c
    return a
