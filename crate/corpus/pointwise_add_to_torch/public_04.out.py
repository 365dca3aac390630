import torch
def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def add_bias(activations, bias):
    shifted = torch.add(activations, bias)
    return shifted
