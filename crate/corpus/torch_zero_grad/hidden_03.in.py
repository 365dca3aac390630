def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def warmup(encoder, decoder, batch):
    encoder.zero_grad()
    decoder.zero_grad()
    recon = decoder(encoder(batch))
    ((recon - batch) ** 2).mean().backward()
    return recon
