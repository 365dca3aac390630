import torch
def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def triple_sum(a, b, c):
    ab = torch.add(a, b)
    abc = torch.add(ab, c)
    return abc
