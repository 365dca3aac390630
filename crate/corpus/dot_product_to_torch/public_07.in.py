import torch

def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def cosine(a, b):
    num = 0.0
    for i in range(len(a)):
        num += a[i] * b[i]
    den = torch.norm(a) * torch.norm(b)
    return num / den
