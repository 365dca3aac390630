import torch
def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
a = torch.randn(8)
b = torch.randn(8)
print('computing')
result = torch.dot(a, b)
print(result)
