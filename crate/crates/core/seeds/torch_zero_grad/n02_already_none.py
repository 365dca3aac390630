def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def reset(model):
    for p in model.parameters():
        p.grad = None
    return model
