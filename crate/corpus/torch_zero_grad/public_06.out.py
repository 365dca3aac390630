import torch
def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def evaluate(model, data):
    for p in model.parameters():
        p.grad = None
    with_grad = False
    total = 0
    for x in data:
        total += model(x).sum()
    return total / len(data)
