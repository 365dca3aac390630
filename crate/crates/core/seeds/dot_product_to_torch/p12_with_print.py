import torch

def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

a = torch.randn(8)
b = torch.randn(8)
print('computing')
result = 0.0
for idx in range(len(a)):
    result += a[idx] * b[idx]
print(result)
