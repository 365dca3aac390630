import torch
def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def squared_norm(v):
    s = torch.dot(v, v)
    return s
