import torch

def pick_larger(a, b):
    if a >= b:
        return a
    return b

def residual_block(x, layer):
    h = torch.relu(layer(x))
    out = []
    for i in range(len(x)):
        out.append(x[i] + h[i])
    return out
