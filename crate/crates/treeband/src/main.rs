use std::io::Write;

fn main() {
    let (out, format) = treeband::cli::run(std::env::args_os());
    let text = out.render(format);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    if out.code == 1 {
        if let Some(msg) = out.json["error"]["message"].as_str() {
            eprintln!("treeband: {msg}");
        }
    }
    std::process::exit(out.code);
}
