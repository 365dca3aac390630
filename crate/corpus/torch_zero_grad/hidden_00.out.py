'Minimal training utilities.'
import torch
def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def reset(model):
    for p in model.parameters():
        p.grad = None
    return model
