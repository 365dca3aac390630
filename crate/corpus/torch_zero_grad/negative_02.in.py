def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def reset(model):
    status = model.zero_grad()
    return status
