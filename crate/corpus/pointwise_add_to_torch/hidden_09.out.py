import torch
def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def add_pairs(pairs):
    outs = []
    for a, b in pairs:
        c = torch.add(a, b)
        outs.append(c)
    return outs
