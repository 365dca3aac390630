import torch
def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def dot(a, b):
    s = torch.dot(a, b)
    return s
