def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def add_bias(activations, bias):
    shifted = [0] * len(activations)
    for j in range(len(activations)):
        shifted[j] = activations[j] + bias[j]
    return shifted
