import torch
def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def total_grad(g1, g2):
    g = torch.add(g1, g2)
    return torch.stack(g)
