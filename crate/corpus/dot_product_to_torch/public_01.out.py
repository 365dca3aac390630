import torch
def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def similarity(u, v):
    total = torch.dot(u, v)
    return total
