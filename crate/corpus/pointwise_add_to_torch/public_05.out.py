'Vector utilities.'
import torch
def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def vadd(u, v):
    w = torch.add(u, v)
    return w
